//! Text syntax for group names.
//!
//! ```text
//! spec     = alternating | sporadic | atlas | lie ;
//! alternating = ("Alt" | "A") ["_"] "(" int ")" | "Alt" ["_"] int ;
//! sporadic = name from the sporadic list, e.g. "M11", "Fi24'", "O'N", "2F4(2)'" ;
//! atlas    = ("L" | "U") int "(" int ")" ;      L_n(q) = A_{n-1}(q), U_n(q) = 2A_{n-1}(q)
//! lie      = ["^"] [twist] letter ( rank "(" int ")" | "(" int "," int ")" ) ;
//! twist    = "2" | "3" ;
//! letter   = "A" | "B" | "C" | "D" | "E" | "F" | "G" ;
//! rank     = ["_"] ( int | "{" int "}" ) ;
//! ```
//!
//! Whitespace is ignored. In the subscript form the number after the letter
//! is the Lie rank: "A5(2)" is A_5(2) = PSL_6(2). In the comma form the first
//! argument is the parameter n of the tables: the dimension for A and 2A, so
//! "A(6,2)" is again A_5(2), and the rank for every other family.

use super::{GroupSpec, LieSeries, Sporadic};
use crate::error::{Error, Result};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.text[start..self.pos].parse().map_err(|_| self.error("number too large"))
    }

    fn done(&self) -> bool {
        self.pos == self.text.len()
    }

    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {} in {:?}", self.pos, self.text))
    }
}

fn to_u32(v: u64, c: &Cursor) -> Result<u32> {
    u32::try_from(v).map_err(|_| c.error("number too large"))
}

/// Parses and validates a group name.
pub fn parse_spec(text: &str) -> Result<GroupSpec> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty group name".into()));
    }
    if let Some(s) = Sporadic::from_name(&compact) {
        return Ok(GroupSpec::Sporadic(s));
    }
    let mut c = Cursor { text: &compact, pos: 0 };

    if compact.starts_with("Alt") || compact.starts_with("alt") {
        c.pos = 3;
        c.eat('_');
        let n = if c.eat('(') {
            let n = c.number()?;
            c.expect(')')?;
            n
        } else {
            c.number()?
        };
        if !c.done() {
            return Err(c.error("trailing input"));
        }
        return GroupSpec::alternating(to_u32(n, &c)?);
    }

    if let Some(first @ ('L' | 'U')) = c.peek() {
        c.pos = 1;
        let n = to_u32(c.number()?, &c)?;
        c.expect('(')?;
        let q = c.number()?;
        c.expect(')')?;
        if !c.done() {
            return Err(c.error("trailing input"));
        }
        if n < 2 {
            return Err(Error::Domain(format!("{compact}: dimension must be at least 2")));
        }
        let series = if first == 'L' { LieSeries::A } else { LieSeries::TwistedA };
        return GroupSpec::lie(series, n - 1, q);
    }

    c.eat('^');
    let twist = match c.peek() {
        Some(d @ ('2' | '3')) => {
            c.pos += 1;
            Some(d)
        }
        _ => None,
    };
    let letter = match c.peek() {
        Some(l @ ('A' | 'B' | 'C' | 'D' | 'E' | 'F' | 'G')) => {
            c.pos += 1;
            l
        }
        _ => return Err(c.error("expected a family letter A-G")),
    };
    if letter == 'A' && twist.is_none() && c.eat('_') && c.peek() == Some('(') {
        // "A_(n)" reads as an alternating group.
        c.expect('(')?;
        let n = c.number()?;
        c.expect(')')?;
        return GroupSpec::alternating(to_u32(n, &c)?);
    }
    let (param, q, comma_form) = if c.eat('(') {
        let a = c.number()?;
        if c.eat(',') {
            let q = c.number()?;
            c.expect(')')?;
            (a, q, true)
        } else {
            c.expect(')')?;
            if letter == 'A' && twist.is_none() {
                // "A(n)" with a single argument is the alternating group.
                if !c.done() {
                    return Err(c.error("trailing input"));
                }
                return GroupSpec::alternating(to_u32(a, &c)?);
            }
            return Err(c.error("missing rank"));
        }
    } else {
        c.eat('_');
        let braced = c.eat('{');
        let rank = c.number()?;
        if braced {
            c.expect('}')?;
        }
        c.expect('(')?;
        let q = c.number()?;
        c.expect(')')?;
        (rank, q, false)
    };
    let prime = c.eat('\'');
    if !c.done() {
        return Err(c.error("trailing input"));
    }
    let param = to_u32(param, &c)?;

    let series = match (twist, letter) {
        (None, 'A') => LieSeries::A,
        (Some('2'), 'A') => LieSeries::TwistedA,
        (None, 'B') => LieSeries::B,
        (Some('2'), 'B') => LieSeries::Suzuki,
        (None, 'C') => LieSeries::C,
        (None, 'D') => LieSeries::D,
        (Some('2'), 'D') => LieSeries::TwistedD,
        (Some('3'), 'D') => LieSeries::TrialityD4,
        (None, 'E') => match param {
            6 => LieSeries::E6,
            7 => LieSeries::E7,
            8 => LieSeries::E8,
            _ => return Err(Error::Parse(format!("{compact}: E needs rank 6, 7 or 8"))),
        },
        (Some('2'), 'E') => LieSeries::TwistedE6,
        (None, 'F') => LieSeries::F4,
        (Some('2'), 'F') => LieSeries::ReeF4,
        (None, 'G') => LieSeries::G2,
        (Some('2'), 'G') => LieSeries::ReeG2,
        _ => return Err(Error::Parse(format!("{compact}: unknown family"))),
    };
    let rank = if comma_form && matches!(series, LieSeries::A | LieSeries::TwistedA) {
        if param < 2 {
            return Err(Error::Domain(format!("{compact}: dimension must be at least 2")));
        }
        param - 1
    } else {
        param
    };
    if prime {
        if series == LieSeries::ReeF4 && q == 2 {
            return Ok(GroupSpec::Sporadic(Sporadic::Tits));
        }
        return Err(Error::Parse(format!("{compact}: a derived-group mark is only meaningful for 2F4(2)'")));
    }
    GroupSpec::lie(series, rank, q)
}
