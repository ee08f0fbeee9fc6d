//! Line-oriented treebank serialization of dependency trees.
//!
//! Each token is one row of five tab-separated columns — INDEX, FORM, CAT,
//! HEAD, ROLE — with HEAD 0 and ROLE `root` marking the root token. A blank
//! line ends a sentence, lines starting with `#` are comments, and both LF
//! and CRLF line endings are accepted.

use std::io::BufRead;

use thiserror::Error;

use crate::model::{Arc, Category, DepType, DependencyTree, Token, TreeError};

/// A parse failure, located by 1-based input line.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

/// What went wrong on a treebank line (or in the sentence it closed).
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected 5 tab-separated fields, found {0}")]
    ColumnCount(usize),
    #[error("INDEX field `{0}` is not a positive integer")]
    BadIndex(String),
    #[error("expected INDEX {expected}, found {found}")]
    IndexOutOfOrder { expected: usize, found: usize },
    #[error("HEAD field `{0}` is not an integer")]
    BadHead(String),
    #[error("HEAD {head} is out of range for a {len}-token sentence")]
    HeadOutOfRange { head: usize, len: usize },
    #[error("ROLE field `{0}` is not one of comp, mod, spec, root")]
    BadRole(String),
    #[error("ROLE `root` and HEAD 0 must occur together")]
    RootMismatch,
    #[error(transparent)]
    Tree(TreeError),
    #[error("read failed: {0}")]
    Io(String),
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// One token row: the parsed five columns plus the input line it came from
/// (0 for rows built in memory).
#[derive(Clone, Debug, PartialEq, Eq)]
struct Row {
    line: usize,
    token: Token,
    head: usize,
    role: Option<DepType>,
}

/// One sentence of the treebank: its token rows in input order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreebankRecord {
    rows: Vec<Row>,
}

impl TreebankRecord {
    /// Re-encode a dependency tree as a record; the inverse of
    /// [`TreebankRecord::to_tree`].
    pub fn from_tree(tree: &DependencyTree) -> Self {
        let rows = tree
            .tokens()
            .iter()
            .map(|token| {
                let (head, role) = match tree.head_of(token.index) {
                    Some((head, role)) => (head, Some(role)),
                    None => (0, None),
                };
                Row {
                    line: 0,
                    token: token.clone(),
                    head,
                    role,
                }
            })
            .collect();
        TreebankRecord { rows }
    }

    /// Validate the record into a dependency tree. Head fields are checked
    /// against the sentence length row by row; everything else is delegated
    /// to tree construction, with errors located at the record's first line.
    pub fn to_tree(&self) -> Result<DependencyTree, ParseError> {
        let len = self.rows.len();
        let first_line = self.rows.first().map_or(0, |row| row.line);
        let mut tokens = Vec::with_capacity(len);
        let mut arcs = Vec::new();
        for row in &self.rows {
            if row.head > len {
                return Err(err(
                    row.line,
                    ParseErrorKind::HeadOutOfRange {
                        head: row.head,
                        len,
                    },
                ));
            }
            tokens.push(row.token.clone());
            if let Some(role) = row.role {
                arcs.push(Arc::new(row.head, row.token.index, role));
            }
        }
        DependencyTree::new(tokens, arcs).map_err(|e| err(first_line, ParseErrorKind::Tree(e)))
    }

    /// The record as treebank text: one row per line, each line terminated,
    /// with no trailing blank line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let role = row.role.map_or("root", DepType::code);
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                row.token.index, row.token.form, row.token.category, row.head, role
            ));
        }
        out
    }
}

/// Parse treebank text into one record per sentence block.
pub fn read_records<R: BufRead>(reader: R) -> Result<Vec<TreebankRecord>, ParseError> {
    let mut records = Vec::new();
    let mut rows: Vec<Row> = Vec::new();
    let mut line_number = 0;
    for line in reader.lines() {
        line_number += 1;
        let line = line.map_err(|e| err(line_number, ParseErrorKind::Io(e.to_string())))?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.trim().is_empty() {
            if !rows.is_empty() {
                records.push(TreebankRecord {
                    rows: std::mem::take(&mut rows),
                });
            }
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        rows.push(parse_row(line_number, line, rows.len() + 1)?);
    }
    if !rows.is_empty() {
        records.push(TreebankRecord { rows });
    }
    Ok(records)
}

fn parse_row(line: usize, text: &str, expected_index: usize) -> Result<Row, ParseError> {
    let fields: Vec<&str> = text.split('\t').collect();
    let [index, form, category, head, role] = fields.as_slice() else {
        return Err(err(line, ParseErrorKind::ColumnCount(fields.len())));
    };

    let index: usize = index
        .parse()
        .ok()
        .filter(|&i| i > 0)
        .ok_or_else(|| err(line, ParseErrorKind::BadIndex(index.to_string())))?;
    if index != expected_index {
        return Err(err(
            line,
            ParseErrorKind::IndexOutOfOrder {
                expected: expected_index,
                found: index,
            },
        ));
    }

    if form.is_empty() {
        return Err(err(
            line,
            ParseErrorKind::Tree(TreeError::EmptyForm { index }),
        ));
    }
    let category = Category::new(*category).map_err(|e| err(line, ParseErrorKind::Tree(e)))?;

    let head: usize = head
        .parse()
        .map_err(|_| err(line, ParseErrorKind::BadHead(head.to_string())))?;

    let role = match *role {
        "root" => None,
        code => Some(
            DepType::from_code(code)
                .ok_or_else(|| err(line, ParseErrorKind::BadRole(code.to_string())))?,
        ),
    };
    if role.is_none() != (head == 0) {
        return Err(err(line, ParseErrorKind::RootMismatch));
    }

    Ok(Row {
        line,
        token: Token::new(index, *form, category),
        head,
        role,
    })
}

/// Parse treebank text straight to validated dependency trees, one per
/// sentence block.
pub fn read_treebank<R: BufRead>(reader: R) -> Result<Vec<DependencyTree>, ParseError> {
    read_records(reader)?
        .iter()
        .map(TreebankRecord::to_tree)
        .collect()
}

/// Serialize one tree as a treebank sentence block (no trailing blank line).
pub fn write_record(tree: &DependencyTree) -> String {
    TreebankRecord::from_tree(tree).to_text()
}

/// Serialize a sequence of trees as a full treebank, sentence blocks
/// separated by blank lines.
pub fn write_treebank<'a>(trees: impl IntoIterator<Item = &'a DependencyTree>) -> String {
    let records: Vec<String> = trees.into_iter().map(write_record).collect();
    records.join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat(label: &str) -> Category {
        Category::new(label).unwrap()
    }

    fn chased_garden_text() -> &'static str {
        "1\tthe\tD\t3\tspec\n\
         2\told\tAdj\t3\tmod\n\
         3\tdog\tN\t4\tcomp\n\
         4\tchased\tV\t0\troot\n\
         5\tthe\tD\t6\tspec\n\
         6\tcat\tN\t4\tcomp\n\
         7\tinto\tP\t4\tmod\n\
         8\tthe\tD\t9\tspec\n\
         9\tgarden\tN\t7\tcomp\n"
    }

    #[test]
    fn reads_a_whole_sentence() {
        let trees = read_treebank(chased_garden_text().as_bytes()).unwrap();
        assert_eq!(trees.len(), 1);
        let tree = &trees[0];
        assert_eq!(tree.len(), 9);
        assert_eq!(tree.root(), 4);
        assert_eq!(tree.token(9).unwrap().form, "garden");
        assert_eq!(tree.head_of(7), Some((4, DepType::Modifier)));
        assert_eq!(tree.token(3).unwrap().category, cat("N"));
    }

    #[test]
    fn reads_a_single_token_sentence() {
        let trees = read_treebank("1\tdog\tN\t0\troot\n\n".as_bytes()).unwrap();
        assert_eq!(trees.len(), 1);
        assert_eq!(trees[0].len(), 1);
        assert_eq!(trees[0].root(), 1);
    }

    #[test]
    fn skips_comments_and_accepts_crlf() {
        let text = "# a comment\r\n1\tdog\tN\t0\troot\r\n\r\n# trailing note\r\n";
        let trees = read_treebank(text.as_bytes()).unwrap();
        assert_eq!(trees.len(), 1);
        assert_eq!(trees[0].token(1).unwrap().form, "dog");
    }

    #[test]
    fn splits_sentences_on_blank_lines() {
        let text = "1\tdog\tN\t0\troot\n\n\n1\tcat\tN\t0\troot\n";
        let trees = read_treebank(text.as_bytes()).unwrap();
        assert_eq!(trees.len(), 2);
        assert_eq!(trees[1].token(1).unwrap().form, "cat");
    }

    #[test]
    fn reports_malformed_rows_by_line() {
        let check = |text: &str, line: usize, kind: ParseErrorKind| {
            assert_eq!(
                read_treebank(text.as_bytes()),
                Err(err(line, kind)),
                "{text:?}"
            );
        };
        check("1\tdog\tN\t0\n", 1, ParseErrorKind::ColumnCount(4));
        check(
            "x\tdog\tN\t0\troot\n",
            1,
            ParseErrorKind::BadIndex("x".to_string()),
        );
        check(
            "0\tdog\tN\t0\troot\n",
            1,
            ParseErrorKind::BadIndex("0".to_string()),
        );
        check(
            "1\tdog\tN\t0\troot\n3\tcat\tN\t1\tcomp\n",
            2,
            ParseErrorKind::IndexOutOfOrder {
                expected: 2,
                found: 3,
            },
        );
        check(
            "1\tdog\tN\t-1\troot\n",
            1,
            ParseErrorKind::BadHead("-1".to_string()),
        );
        check(
            "1\tdog\tN\t0\tnsubj\n",
            1,
            ParseErrorKind::BadRole("nsubj".to_string()),
        );
        check("1\tdog\tN\t1\troot\n", 1, ParseErrorKind::RootMismatch);
        check("1\tdog\tN\t0\tcomp\n", 1, ParseErrorKind::RootMismatch);
        check(
            "1\tdog\tN\t0\troot\n2\tbarks\tV\t5\tcomp\n",
            2,
            ParseErrorKind::HeadOutOfRange { head: 5, len: 2 },
        );
        check(
            "1\t\tN\t0\troot\n",
            1,
            ParseErrorKind::Tree(TreeError::EmptyForm { index: 1 }),
        );
        check(
            "1\tdog\tN P\t0\troot\n",
            1,
            ParseErrorKind::Tree(TreeError::InvalidCategory("N P".to_string())),
        );
    }

    #[test]
    fn tree_level_failures_name_the_sentence_start_line() {
        // Two roots: rows parse fine, validation fails for the block
        // beginning at line 3.
        let text = "# two-root sentence\n\n1\ta\tN\t0\troot\n2\tb\tN\t0\troot\n";
        assert_eq!(
            read_treebank(text.as_bytes()),
            Err(err(
                3,
                ParseErrorKind::Tree(TreeError::MultipleRoots { roots: vec![1, 2] })
            ))
        );
    }

    #[test]
    fn serialization_round_trips() {
        let trees = read_treebank(chased_garden_text().as_bytes()).unwrap();
        assert_eq!(write_record(&trees[0]), chased_garden_text());
        let text = write_treebank(&trees);
        assert_eq!(read_treebank(text.as_bytes()).unwrap(), trees);
    }

    #[test]
    fn treebank_of_two_sentences_has_one_separator() {
        let trees = read_treebank("1\tdog\tN\t0\troot\n\n1\tcat\tN\t0\troot\n".as_bytes()).unwrap();
        assert_eq!(
            write_treebank(&trees),
            "1\tdog\tN\t0\troot\n\n1\tcat\tN\t0\troot\n"
        );
    }
}
