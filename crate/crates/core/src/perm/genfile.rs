//! The generator file format:
//!
//! ```text
//! # comment
//! degree 8
//! g1 = (1,2)
//! g2 = (1,2,3,4,5,6,7,8)
//! ```

use super::{permutation::parse_cycles, GeneratorSet, Permutation};
use crate::error::{Error, Result};

fn file_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::GeneratorFile {
        line,
        column,
        message: message.into(),
    }
}

fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && !name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '*' | '^' | '(' | ')' | '=' | ',' | '#'))
}

/// Parses a generator file. Errors carry 1-based line and column numbers.
pub fn parse_generator_file(text: &str) -> Result<GeneratorSet> {
    let mut degree: Option<usize> = None;
    let mut gens = Vec::new();
    let mut names: Vec<String> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let body = content.trim();
        let Some(n) = degree else {
            let mut parts = body.split_whitespace();
            if parts.next() != Some("degree") {
                return Err(file_error(line_no, indent + 1, "expected `degree <n>`"));
            }
            let value = parts
                .next()
                .ok_or_else(|| file_error(line_no, indent + body.len() + 1, "missing degree"))?;
            let column = indent + body.find(value).unwrap() + 1;
            let n: usize = value
                .parse()
                .map_err(|_| file_error(line_no, column, "degree must be a positive integer"))?;
            if n == 0 {
                return Err(file_error(line_no, column, "degree must be a positive integer"));
            }
            if parts.next().is_some() {
                return Err(file_error(line_no, column + value.len(), "trailing input"));
            }
            degree = Some(n);
            continue;
        };
        let Some(eq) = content.find('=') else {
            return Err(file_error(line_no, indent + 1, "expected `<name> = <cycles>`"));
        };
        let name = content[..eq].trim();
        if !valid_name(name) {
            return Err(file_error(line_no, indent + 1, format!("invalid generator name {name:?}")));
        }
        if names.iter().any(|n| n == name) {
            return Err(file_error(line_no, indent + 1, format!("duplicate generator name {name:?}")));
        }
        let rhs = &content[eq + 1..];
        let rhs_col = eq + 2;
        let perm = parse_cycles(rhs)
            .and_then(|cycles| Permutation::from_cycles(n, &cycles))
            .map_err(|e| match e {
                Error::Syntax { column, message } => file_error(line_no, rhs_col + column - 1, message),
                other => file_error(line_no, rhs_col, other.to_string()),
            })?;
        gens.push(perm);
        names.push(name.to_string());
    }
    let degree = degree.ok_or_else(|| file_error(1, 1, "missing `degree <n>` line"))?;
    GeneratorSet::with_names(degree, gens, names)
}

/// Writes a generator set in the format read by [`parse_generator_file`].
pub fn format_generator_file(gens: &GeneratorSet) -> String {
    let mut out = format!("degree {}\n", gens.degree());
    for (name, g) in gens.names().iter().zip(gens.gens()) {
        out.push_str(&format!("{name} = {g}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_names() {
        let text = "# S8\n\ndegree 8\ng1 = (1,2)   # transposition\ng2 = (1,2,3,4,5,6,7,8)\n";
        let gens = parse_generator_file(text).unwrap();
        assert_eq!(gens.degree(), 8);
        assert_eq!(gens.names(), ["g1", "g2"]);
        assert_eq!(gens.gens()[1].image(8), 1);
        assert_eq!(parse_generator_file(&format_generator_file(&gens)).unwrap(), gens);
    }

    #[test]
    fn degree_only_is_empty_set() {
        let gens = parse_generator_file("degree 5\n").unwrap();
        assert!(gens.is_empty());
    }

    #[test]
    fn reports_line_and_column() {
        let err = parse_generator_file("degree 4\na = (1,2)\nb = (1,,2)\n").unwrap_err();
        assert_eq!(
            err,
            Error::GeneratorFile {
                line: 3,
                column: 8,
                message: "expected a point".into()
            }
        );
        let err = parse_generator_file("a = (1,2)\n").unwrap_err();
        assert!(matches!(err, Error::GeneratorFile { line: 1, column: 1, .. }));
        let err = parse_generator_file("degree 3\na = (1,4)\n").unwrap_err();
        assert!(matches!(err, Error::GeneratorFile { line: 2, .. }));
        let err = parse_generator_file("degree 3\na = (1,2)\na = (2,3)\n").unwrap_err();
        assert!(matches!(err, Error::GeneratorFile { line: 3, .. }));
        assert!(parse_generator_file("").is_err());
        assert!(parse_generator_file("degree x\n").is_err());
    }
}
