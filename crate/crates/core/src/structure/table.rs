use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::classes::ClassTable;
use crate::error::{Error, Result};

/// One printable row of a class table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub class: String,
    /// A word for the representative, when one was computed.
    pub word: Option<String>,
    pub centralizer_order: u128,
    /// `p -> name of the class of representative^p`.
    pub powers: BTreeMap<u64, String>,
    pub size: u128,
    pub representative: String,
}

/// A class table in the form it is printed: named classes, power maps as
/// class names.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTableReport {
    pub group_order: u128,
    pub primes: Vec<u64>,
    pub rows: Vec<ClassRow>,
}

const ORDER_PREFIX: &str = "# group order ";

impl ClassTableReport {
    /// `words[i]`, if given, is the word shown for class `i`.
    pub fn new(table: &ClassTable, words: Option<&[String]>) -> Self {
        let names = table.class_names();
        let rows = table
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| ClassRow {
                class: names[i].clone(),
                word: words.map(|w| w[i].clone()),
                centralizer_order: c.centralizer_order,
                powers: table
                    .power_maps
                    .iter()
                    .map(|(&p, map)| (p, names[map[i]].clone()))
                    .collect(),
                size: c.size,
                representative: c.representative.to_string(),
            })
            .collect();
        ClassTableReport {
            group_order: table.group_order,
            primes: table.primes(),
            rows,
        }
    }

    /// Fixed-column text: Class, Word, |Centralizer|, one pP column per
    /// prime, Size, Representative.
    pub fn render_text(&self) -> String {
        let mut header: Vec<String> = vec!["Class".into(), "Word".into(), "|Centralizer|".into()];
        header.extend(self.primes.iter().map(|p| format!("{p}P")));
        header.push("Size".into());
        header.push("Representative".into());
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| {
                let mut row = vec![
                    r.class.clone(),
                    r.word.clone().unwrap_or_else(|| "-".into()),
                    r.centralizer_order.to_string(),
                ];
                row.extend(self.primes.iter().map(|p| r.powers[p].clone()));
                row.push(r.size.to_string());
                row.push(r.representative.clone());
                row
            })
            .collect();
        let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = format!("{ORDER_PREFIX}{}\n", self.group_order);
        for row in std::iter::once(&header).chain(cells.iter()) {
            let last = row.len() - 1;
            let mut line = String::new();
            for (i, c) in row.iter().enumerate() {
                if i == last {
                    line.push_str(c);
                } else {
                    let _ = write!(line, "{:<width$}  ", c, width = widths[i]);
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// Reads back the output of [`ClassTableReport::render_text`].
    pub fn parse_text(text: &str) -> Result<Self> {
        let bad = |line: usize, message: &str| Error::GeneratorFile {
            line,
            column: 1,
            message: message.to_string(),
        };
        let mut lines = text.lines().enumerate();
        let (_, first) = lines.next().ok_or_else(|| bad(1, "empty table"))?;
        let group_order = first
            .strip_prefix(ORDER_PREFIX)
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| bad(1, "missing group order"))?;
        let (_, head) = lines.next().ok_or_else(|| bad(2, "missing header"))?;
        let header: Vec<&str> = head.split_whitespace().collect();
        if header.len() < 5 {
            return Err(bad(2, "short header"));
        }
        let primes = header[3..header.len() - 2]
            .iter()
            .map(|h| h.strip_suffix('P').and_then(|p| p.parse().ok()))
            .collect::<Option<Vec<u64>>>()
            .ok_or_else(|| bad(2, "bad power-map column"))?;
        let mut rows = Vec::new();
        for (i, line) in lines {
            let cells: Vec<&str> = line.split_whitespace().collect();
            if cells.len() != header.len() {
                return Err(bad(i + 1, "wrong number of columns"));
            }
            let num = |s: &str| s.parse::<u128>().map_err(|_| bad(i + 1, "bad number"));
            rows.push(ClassRow {
                class: cells[0].into(),
                word: (cells[1] != "-").then(|| cells[1].to_string()),
                centralizer_order: num(cells[2])?,
                powers: primes
                    .iter()
                    .zip(&cells[3..])
                    .map(|(&p, c)| (p, c.to_string()))
                    .collect(),
                size: num(cells[cells.len() - 2])?,
                representative: cells[cells.len() - 1].into(),
            });
        }
        Ok(ClassTableReport {
            group_order,
            primes,
            rows,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::PermGroup;
    use crate::structure::conjugacy_classes;

    #[test]
    fn s4_text_layout() {
        let table = conjugacy_classes(&PermGroup::symmetric(4), 100).unwrap();
        let report = ClassTableReport::new(&table, None);
        let text = report.render_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "# group order 24");
        assert!(lines[1].starts_with("Class  Word  |Centralizer|  2P  3P  Size"));
        assert_eq!(lines.len(), 7);
        assert!(lines[2].starts_with("1A "));
        assert!(lines[2].ends_with("()"));
    }

    #[test]
    fn text_and_json_round_trip() {
        let table = conjugacy_classes(&PermGroup::alternating(5), 100).unwrap();
        let words: Vec<String> = (0..table.classes.len()).map(|i| format!("w{i}")).collect();
        for report in [
            ClassTableReport::new(&table, None),
            ClassTableReport::new(&table, Some(&words)),
        ] {
            assert_eq!(ClassTableReport::parse_text(&report.render_text()).unwrap(), report);
            let json = serde_json::to_string(&report).unwrap();
            assert_eq!(serde_json::from_str::<ClassTableReport>(&json).unwrap(), report);
        }
    }
}
