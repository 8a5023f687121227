//! Line-oriented description format for finite algebras.
//!
//! A document names its elements, gives the structure as either a meet
//! table (`meet a b v` entries) or an order (`le a b` pairs, closed
//! reflexively and transitively), declares the top, and optionally lists
//! pointwise operator tables.  `#` starts a comment.  Labels are free-form
//! words; structure laws are NOT checked here — a total but lawless table
//! parses fine and fails verification later, with a witness.

use std::collections::BTreeMap;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Operator names admitted in documents, in canonical report order.
pub const OP_NAMES: [char; 6] = ['i', 'd', 'P', 'G', 'F', 'H'];

/// The structural part of a document: a complete meet table or an order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableSpec {
    /// Row-major `n × n` table of element indices.
    Meet(Vec<usize>),
    /// Generating pairs `a <= b`; the order is their reflexive-transitive
    /// closure.
    Leq(Vec<(usize, usize)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraDocument {
    pub name: String,
    pub labels: Vec<String>,
    pub top: usize,
    pub table: TableSpec,
    /// Operator tables keyed by name, in `OP_NAMES` order.
    pub ops: Vec<(char, Vec<usize>)>,
}

impl AlgebraDocument {
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn op(&self, name: char) -> Option<&[usize]> {
        self.ops
            .iter()
            .find(|(c, _)| *c == name)
            .map(|(_, t)| t.as_slice())
    }

    pub fn op_names(&self) -> Vec<char> {
        self.ops.iter().map(|(c, _)| *c).collect()
    }
}

struct Line<'a> {
    no: usize,
    words: Vec<&'a str>,
}

/// Parses a document.  Structural problems (unknown labels, missing
/// entries, duplicates) are reported with their line number; algebra laws
/// are out of scope here.
pub fn parse_document(text: &str) -> Result<AlgebraDocument, ParseError> {
    let lines: Vec<Line> = text
        .lines()
        .enumerate()
        .map(|(i, raw)| {
            let body = raw.split('#').next().unwrap_or("");
            Line {
                no: i + 1,
                words: body.split_whitespace().collect(),
            }
        })
        .filter(|l| !l.words.is_empty())
        .collect();

    // The carrier must be known before labels can be resolved, so find it
    // first; every other directive may appear in any order.
    let mut labels: Vec<String> = Vec::new();
    let mut elements_line = 0;
    for l in &lines {
        if l.words[0] == "elements" {
            if elements_line != 0 {
                return err(l.no, "duplicate `elements` directive");
            }
            if l.words.len() == 1 {
                return err(l.no, "`elements` needs at least one label");
            }
            elements_line = l.no;
            labels = l.words[1..].iter().map(|w| w.to_string()).collect();
        }
    }
    if elements_line == 0 {
        return err(lines.last().map_or(1, |l| l.no), "missing `elements` directive");
    }
    let n = labels.len();
    let mut index: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, lab) in labels.iter().enumerate() {
        if index.insert(lab.as_str(), i).is_some() {
            return err(elements_line, format!("duplicate element label `{lab}`"));
        }
    }
    let resolve = |line: usize, w: &str| -> Result<usize, ParseError> {
        index
            .get(w)
            .copied()
            .ok_or(ParseError {
                line,
                message: format!("unknown element label `{w}`"),
            })
    };

    let mut name: Option<String> = None;
    let mut top: Option<usize> = None;
    let mut meets: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
    let mut saw_meet = false;
    let mut leq: Vec<(usize, usize)> = Vec::new();
    let mut saw_le = false;
    let mut ops: Vec<(char, Vec<usize>)> = Vec::new();

    for l in &lines {
        match l.words[0] {
            "elements" => {}
            "name" => {
                if l.words.len() != 2 {
                    return err(l.no, "`name` takes exactly one word");
                }
                if name.replace(l.words[1].to_string()).is_some() {
                    return err(l.no, "duplicate `name` directive");
                }
            }
            "top" => {
                if l.words.len() != 2 {
                    return err(l.no, "`top` takes exactly one label");
                }
                if top.replace(resolve(l.no, l.words[1])?).is_some() {
                    return err(l.no, "duplicate `top` directive");
                }
            }
            "meet" => {
                if l.words.len() != 4 {
                    return err(l.no, "`meet` takes three labels: meet a b v");
                }
                saw_meet = true;
                let a = resolve(l.no, l.words[1])?;
                let b = resolve(l.no, l.words[2])?;
                let v = resolve(l.no, l.words[3])?;
                if meets[a][b].replace(v).is_some() {
                    return err(
                        l.no,
                        format!("meet of `{}` and `{}` given twice", l.words[1], l.words[2]),
                    );
                }
            }
            "le" => {
                if l.words.len() != 3 {
                    return err(l.no, "`le` takes two labels: le a b");
                }
                saw_le = true;
                leq.push((resolve(l.no, l.words[1])?, resolve(l.no, l.words[2])?));
            }
            "op" => {
                if l.words.len() < 2 {
                    return err(l.no, "`op` needs a name and a table");
                }
                let mut chars = l.words[1].chars();
                let c = match (chars.next(), chars.next()) {
                    (Some(c), None) if OP_NAMES.contains(&c) => c,
                    _ => {
                        return err(
                            l.no,
                            format!(
                                "operator name must be one of {}",
                                OP_NAMES.iter().collect::<String>()
                            ),
                        )
                    }
                };
                if ops.iter().any(|(d, _)| *d == c) {
                    return err(l.no, format!("duplicate operator `{c}`"));
                }
                if l.words.len() != n + 2 {
                    return err(
                        l.no,
                        format!("operator `{c}` needs {n} entries, one per element"),
                    );
                }
                let table = l.words[2..]
                    .iter()
                    .map(|w| resolve(l.no, w))
                    .collect::<Result<Vec<usize>, ParseError>>()?;
                ops.push((c, table));
            }
            other => return err(l.no, format!("unknown directive `{other}`")),
        }
    }

    let top = match top {
        Some(t) => t,
        None => return err(lines.last().map_or(1, |l| l.no), "missing `top` directive"),
    };
    if saw_meet && saw_le {
        return err(
            lines.last().map_or(1, |l| l.no),
            "give either `meet` entries or `le` pairs, not both",
        );
    }
    let table = if saw_le || !saw_meet {
        if !saw_le && n > 1 {
            return err(
                lines.last().map_or(1, |l| l.no),
                "no structure given: add `meet` entries or `le` pairs",
            );
        }
        TableSpec::Leq(leq)
    } else {
        // Complete the table: the diagonal defaults to the element itself
        // and missing mirror entries copy the given direction.  Anything
        // still missing is a structural error.
        for a in 0..n {
            if meets[a][a].is_none() {
                meets[a][a] = Some(a);
            }
        }
        for a in 0..n {
            for b in 0..n {
                if meets[a][b].is_none() {
                    meets[a][b] = meets[b][a];
                }
            }
        }
        let mut flat = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                match meets[a][b] {
                    Some(v) => flat.push(v),
                    None => {
                        return err(
                            elements_line,
                            format!(
                                "meet of `{}` and `{}` is unspecified",
                                labels[a], labels[b]
                            ),
                        )
                    }
                }
            }
        }
        TableSpec::Meet(flat)
    };

    ops.sort_by_key(|(c, _)| OP_NAMES.iter().position(|d| d == c).unwrap());
    Ok(AlgebraDocument {
        name: name.unwrap_or_else(|| "unnamed".to_string()),
        labels,
        top,
        table,
        ops,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_an_order_form_document() {
        let d = parse_document(
            "# a comment\nname c2\nelements 0 1\ntop 1\nle 0 1\nop i 0 1\nop d 0 1\n",
        )
        .unwrap();
        assert_eq!(d.name, "c2");
        assert_eq!(d.labels, vec!["0", "1"]);
        assert_eq!(d.top, 1);
        assert_eq!(d.table, TableSpec::Leq(vec![(0, 1)]));
        assert_eq!(d.op('i'), Some(&[0, 1][..]));
        assert_eq!(d.op_names(), vec!['i', 'd']);
    }

    #[test]
    fn completes_meet_tables_by_symmetry() {
        let d = parse_document(
            "elements 0 a b 1\ntop 1\nmeet 0 a 0\nmeet 0 b 0\nmeet 0 1 0\nmeet a b 0\nmeet a 1 a\nmeet b 1 b\n",
        )
        .unwrap();
        match d.table {
            TableSpec::Meet(t) => {
                assert_eq!(t[1 * 4 + 2], 0); // a ∧ b
                assert_eq!(t[2 * 4 + 1], 0); // mirror
                assert_eq!(t[3 * 4 + 3], 3); // diagonal default
            }
            _ => panic!("expected a meet table"),
        }
    }

    #[test]
    fn reports_structural_errors_with_lines() {
        let e = parse_document("elements a a\ntop a\n").unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_document("elements a b\ntop c\nle a b\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("unknown element label"));
        let e = parse_document("elements a b\ntop b\nle a b\nop q a b\n").unwrap_err();
        assert!(e.message.contains("operator name"));
        let e = parse_document("elements a b\ntop b\nle a b\nop i a\n").unwrap_err();
        assert!(e.message.contains("2 entries"));
        let e = parse_document("elements a b\ntop b\nmeet a b a\nle a b\n").unwrap_err();
        assert!(e.message.contains("not both"));
        let e = parse_document("elements a b\ntop b\n").unwrap_err();
        assert!(e.message.contains("no structure"));
        let e = parse_document("top a\n").unwrap_err();
        assert!(e.message.contains("missing `elements`"));
    }

    #[test]
    fn lawless_tables_still_parse() {
        // Non-associative on purpose: laws are the verifier's business.
        let d = parse_document(
            "elements 0 a b 1\ntop 1\nmeet 0 a 0\nmeet 0 b 0\nmeet 0 1 0\nmeet a b 1\nmeet a 1 a\nmeet b 1 b\n",
        )
        .unwrap();
        assert!(matches!(d.table, TableSpec::Meet(_)));
    }

    #[test]
    fn ops_are_canonically_ordered() {
        let d = parse_document(
            "elements 0 1\ntop 1\nle 0 1\nop H 0 1\nop P 0 1\nop F 0 1\nop G 0 1\n",
        )
        .unwrap();
        assert_eq!(d.op_names(), vec!['P', 'G', 'F', 'H']);
    }
}
