//! The `.gts` instance format.
//!
//! ```text
//! # comment
//! n m
//! u v flag      (m records, u < v, 0-indexed, flag 1 = tree edge)
//! ```
//!
//! Exactly `n - 1` records carry flag 1. The writer emits the canonical
//! form: no comments, single spaces, records sorted by `(u, v)`.

use std::fmt::Write as _;

use super::Instance;
use crate::graph::{EdgeId, Graph, SpanningTree};
use crate::{Error, Result};

/// Parses and validates an instance, requiring a 2-edge-connected graph.
pub fn read_instance(text: &str) -> Result<Instance> {
    let inst = read_instance_unchecked(text)?;
    if let Some(&bridge) = inst.graph.bridges().first() {
        return Err(Error::Validation(Box::new(Error::NotTwoEdgeConnected(
            inst.graph.edge_label(bridge),
        ))));
    }
    Ok(inst)
}

/// Like [`read_instance`] but accepts graphs with bridges.
pub fn read_instance_unchecked(text: &str) -> Result<Instance> {
    let mut header: Option<(usize, usize)> = None;
    let mut records: Vec<(usize, usize, bool)> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line,
                    msg: format!("`{tok}` is not a nonnegative integer"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        match header {
            None => match fields[..] {
                [n, m] => header = Some((n, m)),
                _ => {
                    return Err(Error::Parse {
                        line,
                        msg: "expected header `n m`".into(),
                    })
                }
            },
            Some((_, m)) => {
                let [u, v, flag] = fields[..] else {
                    return Err(Error::Parse {
                        line,
                        msg: "expected edge record `u v flag`".into(),
                    });
                };
                if records.len() == m {
                    return Err(Error::Parse {
                        line,
                        msg: format!("more than {m} edge records"),
                    });
                }
                if u > v {
                    return Err(Error::Parse {
                        line,
                        msg: format!("endpoints must satisfy u < v, got {u} {v}"),
                    });
                }
                if flag > 1 {
                    return Err(Error::Parse {
                        line,
                        msg: format!("tree flag must be 0 or 1, got {flag}"),
                    });
                }
                records.push((u, v, flag == 1));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::Parse {
            line: last_line.max(1),
            msg: "missing header `n m`".into(),
        });
    };
    if records.len() != m {
        return Err(Error::Parse {
            line: last_line + 1,
            msg: format!("expected {m} edge records, found {}", records.len()),
        });
    }
    let invalid = |e: Error| Error::Validation(Box::new(e));
    let g = Graph::new(n, records.iter().map(|&(u, v, _)| (u, v))).map_err(invalid)?;
    let ids = records
        .iter()
        .enumerate()
        .filter(|(_, r)| r.2)
        .map(|(i, _)| EdgeId(i));
    let t = SpanningTree::new(&g, ids).map_err(invalid)?;
    Ok(Instance::new(g, t))
}

/// Canonical text of an instance.
pub fn write_instance(g: &Graph, t: &SpanningTree) -> String {
    let mut records: Vec<(usize, usize, u8)> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| (u, v, t.contains(EdgeId(i)) as u8))
        .collect();
    records.sort_unstable();
    let mut out = String::new();
    writeln!(out, "{} {}", g.n(), g.edge_count()).unwrap();
    for (u, v, flag) in records {
        writeln!(out, "{u} {v} {flag}").unwrap();
    }
    out
}

/// Parses without the 2-edge-connectivity requirement and rewrites in
/// canonical form.
pub fn canonicalize(text: &str) -> Result<String> {
    let inst = read_instance_unchecked(text)?;
    Ok(write_instance(&inst.graph, &inst.tree))
}
