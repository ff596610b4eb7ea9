// Refuses to build when the sporadic data file no longer matches its recorded
// checksums.

use sha2::{Digest, Sha256};

fn main() {
    let path = "data/sporadic.json";
    println!("cargo:rerun-if-changed={path}");
    let text = std::fs::read_to_string(path).expect("read sporadic data");
    let doc: serde_json::Value = serde_json::from_str(&text).expect("parse sporadic data");
    for g in doc["groups"].as_array().expect("groups array") {
        let name = g["name"].as_str().expect("name");
        let vertices: Vec<&str> =
            g["vertices"].as_array().expect("vertices").iter().map(|v| v.as_str().expect("vertex string")).collect();
        let edges: Vec<String> =
            g["edges"].as_array().expect("edges").iter().map(|e| format!("{}-{}", e[0], e[1])).collect();
        let order: Vec<String> = g["order"]
            .as_array()
            .expect("order")
            .iter()
            .map(|pe| format!("{}^{}", pe[0].as_str().expect("prime string"), pe[1]))
            .collect();
        let canon = format!("{}|{}|{}|{}", name, vertices.join(","), edges.join(","), order.join(","));
        let digest: String = Sha256::digest(canon.as_bytes()).iter().map(|b| format!("{b:02x}")).collect();
        let recorded = g["checksum"].as_str().expect("checksum");
        if digest != recorded {
            panic!("checksum drift in {path} for {name}: recorded {recorded}, computed {digest}");
        }
    }
}
