//! Vendored b-files and the optional plain-HTTP fetch.

use std::io::{Read, Write};
use std::net::TcpStream;

/// Vendored snapshots for the sequences the crate reproduces.
pub fn vendored_bfile(seq_id: &str) -> Option<&'static str> {
    match seq_id.to_uppercase().as_str() {
        "A001263" => Some(include_str!("../fixtures/b001263.txt")),
        "A262370" => Some(include_str!("../fixtures/b262370.txt")),
        "A001519" => Some(include_str!("../fixtures/b001519.txt")),
        "A263790" => Some(include_str!("../fixtures/b263790.txt")),
        "A260696" => Some(include_str!("../fixtures/b260696.txt")),
        "A029651" => Some(include_str!("../fixtures/b029651.txt")),
        _ => None,
    }
}

/// Parses "index value" lines, skipping comments and blanks; indices must be
/// monotone.
pub fn parse_bfile(text: &str) -> Result<Vec<(i64, String)>, String> {
    let mut out: Vec<(i64, String)> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let index: i64 = parts
            .next()
            .ok_or("missing index")?
            .parse()
            .map_err(|e| format!("bad b-file index: {e}"))?;
        let value = parts.next().ok_or("missing value")?.to_string();
        if !value.chars().all(|c| c.is_ascii_digit() || c == '-') {
            return Err(format!("bad b-file value {value:?}"));
        }
        if let Some((prev, _)) = out.last() {
            if index <= *prev {
                return Err(format!("b-file indices not monotone at {index}"));
            }
        }
        out.push((index, value));
    }
    Ok(out)
}

/// Plain HTTP GET of the b-file at `oeis.org/<ID>/b<digits>.txt`; kept minimal
/// and disabled by default for reproducibility.
pub fn fetch_bfile(seq_id: &str) -> Result<String, String> {
    let id = seq_id.to_uppercase();
    if !id.starts_with('A') || !id[1..].chars().all(|c| c.is_ascii_digit()) {
        return Err(format!("malformed sequence id {seq_id:?}"));
    }
    let path = format!("/{}/b{}.txt", id, &id[1..]);
    let mut stream = TcpStream::connect("oeis.org:80").map_err(|e| format!("connect: {e}"))?;
    let request = format!(
        "GET {path} HTTP/1.0\r\nHost: oeis.org\r\nUser-Agent: permcores\r\nConnection: close\r\n\r\n"
    );
    stream
        .write_all(request.as_bytes())
        .map_err(|e| format!("send: {e}"))?;
    let mut response = String::new();
    stream
        .read_to_string(&mut response)
        .map_err(|e| format!("receive: {e}"))?;
    let (head, body) = response
        .split_once("\r\n\r\n")
        .ok_or("malformed HTTP response")?;
    let status = head.lines().next().unwrap_or_default();
    if !status.contains("200") {
        return Err(format!(
            "remote returned {status:?}; the vendored fixtures remain authoritative"
        ));
    }
    Ok(body.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_bfile("1 2\n0 5\n").is_err());
        assert!(parse_bfile("1 x\n").is_err());
        let ok = parse_bfile("# comment\n0 1\n1 3\n\n2 9\n").unwrap();
        assert_eq!(ok.len(), 3);
        assert_eq!(ok[2], (2, "9".to_string()));
    }

    #[test]
    fn vendored_ids_present() {
        for id in ["A001263", "A262370", "A001519", "A263790", "A260696", "A029651"] {
            assert!(vendored_bfile(id).is_some());
        }
        assert!(vendored_bfile("A000001").is_none());
    }
}
