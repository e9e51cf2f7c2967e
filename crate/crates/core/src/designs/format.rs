//! Text (`.des`) and JSON serialization of incidence structures.
//!
//! The `.des` format is a `v b` header line followed by one line per block
//! with its space-separated 0-based points, in stored order, LF-terminated.

use serde::{Deserialize, Serialize};

use super::IncidenceStructure;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct JsonDesign {
    v: usize,
    blocks: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    name: Option<String>,
}

impl IncidenceStructure {
    pub fn to_des(&self) -> String {
        let mut s = format!("{} {}\n", self.v(), self.b());
        for b in self.blocks() {
            let line: Vec<String> = b.iter().map(|x| x.to_string()).collect();
            s.push_str(&line.join(" "));
            s.push('\n');
        }
        s
    }

    pub fn from_des(text: &str) -> Result<Self> {
        if text.contains('\r') {
            return Err(Error::Parse("CR line endings are not accepted".into()));
        }
        let mut lines = text.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty input".into()))?;
        let nums = parse_line(header, 0)?;
        let [v, b] = nums[..] else {
            return Err(Error::Parse("header must be `v b`".into()));
        };
        let blocks = (0..b)
            .map(|j| {
                let line = lines
                    .next()
                    .ok_or_else(|| Error::Parse(format!("expected {b} blocks, found {j}")))?;
                parse_line(line, j + 2)
            })
            .collect::<Result<Vec<_>>>()?;
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Parse("trailing content after last block".into()));
        }
        let d = IncidenceStructure::new(v, blocks)?;
        // Blocks are stored sorted; reject unsorted input so writing is an exact inverse.
        if d.to_des() != text && format!("{}\n", text.trim_end_matches('\n')) != d.to_des() {
            return Err(Error::Parse(
                "block points must be listed in increasing order".into(),
            ));
        }
        Ok(d)
    }

    pub fn to_json(&self) -> String {
        let j = JsonDesign {
            v: self.v(),
            blocks: self.blocks().to_vec(),
            name: self.name().map(String::from),
        };
        serde_json::to_string(&j).expect("design serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: JsonDesign = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let d = IncidenceStructure::new(j.v, j.blocks)?;
        Ok(match j.name {
            Some(n) => d.with_name(n),
            None => d,
        })
    }

    /// Reads either format, choosing JSON when the first non-blank character is `{`.
    pub fn parse_any(text: &str) -> Result<Self> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_des(text)
        }
    }
}

fn parse_line(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_ascii_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| Error::Parse(format!("line {lineno}: bad integer `{t}`")))
        })
        .collect()
}
