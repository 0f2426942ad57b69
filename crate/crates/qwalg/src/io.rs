//! Text format for algebra tables.
//!
//! ```text
//! # comment
//! size 6
//! elements 0 a b c d 1
//! unit 1
//! zero 0
//! table -> :
//! 1 1 1 1 1 1
//! d 1 c 1 1 1
//! ...
//! table meet :
//! ...
//! ```
//!
//! The `->` block is the table of record. Optional `star` (one row), `meet`
//! and `join` blocks are cross-checked against the tables recomputed from
//! `->`; any mismatch fails the load with a cell-level diagnostic. A file
//! whose primary block is `table odot :` instead carries a product-signature
//! algebra and must also declare `table star :`.

use std::path::Path;

use crate::algebra::{AlgebraError, FiniteAlgebra, MbeAlgebra};

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{line}:{col}: {message}")]
    Syntax {
        line: usize,
        col: usize,
        message: String,
    },
    #[error("{line}:{col}: unknown element `{name}`")]
    UnknownElement {
        line: usize,
        col: usize,
        name: String,
    },
    #[error("declared {table} table disagrees with the table recomputed from `->` at row {row}, column {col}: declared `{declared}`, computed `{computed}`")]
    TableMismatch {
        table: &'static str,
        row: String,
        col: String,
        declared: String,
        computed: String,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Optional cross-check tables a file may declare, in declaration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DeclaredTable {
    Star,
    Meet,
    Join,
}

impl DeclaredTable {
    fn keyword(self) -> &'static str {
        match self {
            DeclaredTable::Star => "star",
            DeclaredTable::Meet => "meet",
            DeclaredTable::Join => "join",
        }
    }
}

/// Parsed form of one implication-table file. Keeps which optional tables the
/// file declared so that saving reproduces the file byte for byte.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraFile {
    pub algebra: FiniteAlgebra,
    pub declared: Vec<DeclaredTable>,
}

/// Either signature a file can carry.
#[derive(Debug, Clone, PartialEq)]
pub enum Loaded {
    Be(AlgebraFile),
    Mbe(MbeAlgebra),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Tok {
    text: String,
    line: usize,
    col: usize,
}

fn tokenize(src: &str) -> Vec<Tok> {
    let mut toks = Vec::new();
    for (li, raw) in src.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut col = 0;
        for piece in line.split(' ') {
            // columns are 1-based byte offsets within the line
            if !piece.is_empty() {
                // split on any remaining whitespace (tabs)
                let mut sub_off = 0;
                for w in piece.split_whitespace() {
                    let at = piece[sub_off..].find(w).unwrap() + sub_off;
                    toks.push(Tok {
                        text: w.to_string(),
                        line: li + 1,
                        col: col + at + 1,
                    });
                    sub_off = at + w.len();
                }
            }
            col += piece.len() + 1;
        }
    }
    toks
}

struct Cursor {
    toks: Vec<Tok>,
    pos: usize,
}

impl Cursor {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self, what: &str) -> Result<Tok, IoError> {
        match self.toks.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.clone())
            }
            None => {
                let (line, col) = self
                    .toks
                    .last()
                    .map(|t| (t.line, t.col + t.text.len()))
                    .unwrap_or((1, 1));
                Err(IoError::Syntax {
                    line,
                    col,
                    message: format!("unexpected end of file, expected {what}"),
                })
            }
        }
    }

    fn expect(&mut self, word: &str) -> Result<(), IoError> {
        let t = self.next(&format!("`{word}`"))?;
        if t.text == word {
            Ok(())
        } else {
            Err(IoError::Syntax {
                line: t.line,
                col: t.col,
                message: format!("expected `{word}`, found `{}`", t.text),
            })
        }
    }
}

fn parse_header(cur: &mut Cursor) -> Result<(usize, Vec<String>, usize, usize), IoError> {
    cur.expect("size")?;
    let size_tok = cur.next("a number")?;
    let size: usize = size_tok.text.parse().map_err(|_| IoError::Syntax {
        line: size_tok.line,
        col: size_tok.col,
        message: format!("`{}` is not a valid size", size_tok.text),
    })?;
    if size == 0 {
        return Err(IoError::Syntax {
            line: size_tok.line,
            col: size_tok.col,
            message: "size must be at least 1".into(),
        });
    }
    cur.expect("elements")?;
    let mut names = Vec::with_capacity(size);
    for _ in 0..size {
        let t = cur.next("an element name")?;
        if names.contains(&t.text) {
            return Err(IoError::Syntax {
                line: t.line,
                col: t.col,
                message: format!("duplicate element `{}`", t.text),
            });
        }
        names.push(t.text);
    }
    let lookup = |cur: &mut Cursor, names: &[String]| -> Result<usize, IoError> {
        let t = cur.next("an element name")?;
        names
            .iter()
            .position(|n| *n == t.text)
            .ok_or(IoError::UnknownElement {
                line: t.line,
                col: t.col,
                name: t.text,
            })
    };
    cur.expect("unit")?;
    let unit = lookup(cur, &names)?;
    cur.expect("zero")?;
    let zero = lookup(cur, &names)?;
    Ok((size, names, unit, zero))
}

fn parse_row(cur: &mut Cursor, names: &[String]) -> Result<Vec<usize>, IoError> {
    let mut row = Vec::with_capacity(names.len());
    for _ in 0..names.len() {
        let t = cur.next("a table entry")?;
        let e = names
            .iter()
            .position(|n| *n == t.text)
            .ok_or(IoError::UnknownElement {
                line: t.line,
                col: t.col,
                name: t.text,
            })?;
        row.push(e);
    }
    Ok(row)
}

fn parse_table_block(
    cur: &mut Cursor,
    names: &[String],
) -> Result<(Tok, Vec<Vec<usize>>), IoError> {
    cur.expect("table")?;
    let kind = cur.next("a table name")?;
    cur.expect(":")?;
    let rows = if kind.text == "star" {
        vec![parse_row(cur, names)?]
    } else {
        (0..names.len())
            .map(|_| parse_row(cur, names))
            .collect::<Result<_, _>>()?
    };
    Ok((kind, rows))
}

/// Parse source text carrying either signature.
pub fn parse_source(src: &str) -> Result<Loaded, IoError> {
    let mut cur = Cursor {
        toks: tokenize(src),
        pos: 0,
    };
    let (_, names, unit, zero) = parse_header(&mut cur)?;
    let (first, primary) = parse_table_block(&mut cur, &names)?;
    match first.text.as_str() {
        "->" => {
            let algebra = FiniteAlgebra::new(names.clone(), unit, zero, primary)?;
            let mut declared = Vec::new();
            while cur.peek().is_some() {
                let (kind, rows) = parse_table_block(&mut cur, &names)?;
                let d = match kind.text.as_str() {
                    "star" => DeclaredTable::Star,
                    "meet" => DeclaredTable::Meet,
                    "join" => DeclaredTable::Join,
                    other => {
                        return Err(IoError::Syntax {
                            line: kind.line,
                            col: kind.col,
                            message: format!(
                                "unknown table `{other}` (expected star, meet or join)"
                            ),
                        })
                    }
                };
                cross_check(&algebra, d, &rows)?;
                declared.push(d);
            }
            Ok(Loaded::Be(AlgebraFile { algebra, declared }))
        }
        "odot" => {
            let (kind, star_rows) = parse_table_block(&mut cur, &names)?;
            if kind.text != "star" {
                return Err(IoError::Syntax {
                    line: kind.line,
                    col: kind.col,
                    message: "a product-signature file must declare `table star :`".into(),
                });
            }
            if let Some(t) = cur.peek() {
                return Err(IoError::Syntax {
                    line: t.line,
                    col: t.col,
                    message: format!("unexpected `{}` after the star table", t.text),
                });
            }
            let star = star_rows.into_iter().next().expect("star block has one row");
            let m = MbeAlgebra::new(names, unit, zero, primary, star)?;
            Ok(Loaded::Mbe(m))
        }
        other => Err(IoError::Syntax {
            line: first.line,
            col: first.col,
            message: format!("first table must be `->` or `odot`, found `{other}`"),
        }),
    }
}

fn cross_check(
    a: &FiniteAlgebra,
    d: DeclaredTable,
    rows: &[Vec<usize>],
) -> Result<(), IoError> {
    let n = a.size();
    match d {
        DeclaredTable::Star => {
            for x in 0..n {
                if rows[0][x] != a.star(x) {
                    return Err(IoError::TableMismatch {
                        table: "star",
                        row: a.name(x).to_string(),
                        col: String::new(),
                        declared: a.name(rows[0][x]).to_string(),
                        computed: a.name(a.star(x)).to_string(),
                    });
                }
            }
        }
        DeclaredTable::Meet | DeclaredTable::Join => {
            let (label, table): (_, &dyn Fn(usize, usize) -> usize) = match d {
                DeclaredTable::Meet => ("meet", &|x, y| a.meet(x, y)),
                _ => ("join", &|x, y| a.join(x, y)),
            };
            for x in 0..n {
                for y in 0..n {
                    if rows[x][y] != table(x, y) {
                        return Err(IoError::TableMismatch {
                            table: label,
                            row: a.name(x).to_string(),
                            col: a.name(y).to_string(),
                            declared: a.name(rows[x][y]).to_string(),
                            computed: a.name(table(x, y)).to_string(),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

fn render_header(names: &[String], unit: usize, zero: usize, out: &mut String) {
    out.push_str(&format!("size {}\n", names.len()));
    out.push_str(&format!("elements {}\n", names.join(" ")));
    out.push_str(&format!("unit {}\n", names[unit]));
    out.push_str(&format!("zero {}\n", names[zero]));
}

fn render_rows(names: &[String], rows: &[Vec<usize>], out: &mut String) {
    for row in rows {
        let line: Vec<&str> = row.iter().map(|&e| names[e].as_str()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
}

/// Canonical text form; loading it back reproduces the value exactly.
pub fn render_algebra_file(f: &AlgebraFile) -> String {
    let a = &f.algebra;
    let names = a.names();
    let mut out = String::new();
    render_header(names, a.unit(), a.zero(), &mut out);
    out.push_str("table -> :\n");
    render_rows(names, a.imp_table(), &mut out);
    for &d in &f.declared {
        out.push_str(&format!("table {} :\n", d.keyword()));
        match d {
            DeclaredTable::Star => render_rows(names, &[a.ops().star.clone()], &mut out),
            DeclaredTable::Meet => render_rows(names, &a.ops().meet, &mut out),
            DeclaredTable::Join => render_rows(names, &a.ops().join, &mut out),
        }
    }
    out
}

/// Canonical text form of a product-signature algebra.
pub fn render_mbe(m: &MbeAlgebra) -> String {
    let names = m.names();
    let mut out = String::new();
    render_header(names, m.unit(), m.zero(), &mut out);
    out.push_str("table odot :\n");
    render_rows(names, m.prod_table(), &mut out);
    out.push_str("table star :\n");
    render_rows(names, &[m.star_table().to_vec()], &mut out);
    out
}

pub fn load_file(path: impl AsRef<Path>) -> Result<AlgebraFile, IoError> {
    let src = std::fs::read_to_string(path)?;
    match parse_source(&src)? {
        Loaded::Be(f) => Ok(f),
        Loaded::Mbe(_) => Err(IoError::Syntax {
            line: 1,
            col: 1,
            message: "expected an implication-table file, found a product-signature file".into(),
        }),
    }
}

pub fn load(path: impl AsRef<Path>) -> Result<FiniteAlgebra, IoError> {
    Ok(load_file(path)?.algebra)
}

pub fn load_any(path: impl AsRef<Path>) -> Result<Loaded, IoError> {
    let src = std::fs::read_to_string(path)?;
    parse_source(&src)
}

pub fn save_file(f: &AlgebraFile, path: impl AsRef<Path>) -> Result<(), IoError> {
    Ok(std::fs::write(path, render_algebra_file(f))?)
}

pub fn save(a: &FiniteAlgebra, path: impl AsRef<Path>) -> Result<(), IoError> {
    save_file(
        &AlgebraFile {
            algebra: a.clone(),
            declared: Vec::new(),
        },
        path,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testdata;

    fn qw6_file() -> AlgebraFile {
        AlgebraFile {
            algebra: testdata::qw6(),
            declared: vec![DeclaredTable::Meet],
        }
    }

    #[test]
    fn render_parse_round_trip() {
        let f = qw6_file();
        let text = render_algebra_file(&f);
        match parse_source(&text).unwrap() {
            Loaded::Be(back) => assert_eq!(back, f),
            other => panic!("unexpected {other:?}"),
        }
        // byte stability: rendering the reloaded value reproduces the text
        let Loaded::Be(back) = parse_source(&text).unwrap() else { unreachable!() };
        assert_eq!(render_algebra_file(&back), text);
    }

    #[test]
    fn comments_and_whitespace_are_ignored() {
        let f = qw6_file();
        let text = render_algebra_file(&f);
        let noisy = format!("# header comment\n{}\n# trailing\n", text.replace(' ', "  "));
        let Loaded::Be(back) = parse_source(&noisy).unwrap() else { panic!() };
        assert_eq!(back, f);
    }

    #[test]
    fn corrupt_meet_cell_is_diagnosed() {
        let f = qw6_file();
        let mut text = render_algebra_file(&f);
        // the meet block ends with the unit row `0 a b c d 1`; corrupt its
        // final cell
        assert!(text.ends_with("0 a b c d 1\n"));
        text.truncate(text.len() - 2);
        text.push_str("d\n");
        match parse_source(&text) {
            Err(IoError::TableMismatch { table: "meet", declared, computed, .. }) => {
                assert_eq!(declared, "d");
                assert_eq!(computed, "1");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_element_position_is_reported() {
        let text = "size 2\nelements 0 1\nunit 1\nzero 0\ntable -> :\n1 1\nq 1\n";
        match parse_source(text) {
            Err(IoError::UnknownElement { line: 7, col: 1, name }) => assert_eq!(name, "q"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn size_one_file_loads() {
        let text = "size 1\nelements 1\nunit 1\nzero 1\ntable -> :\n1\n";
        let Loaded::Be(f) = parse_source(text).unwrap() else { panic!() };
        assert_eq!(f.algebra.size(), 1);
    }

    #[test]
    fn mbe_round_trip() {
        let m = crate::algebra::phi_to_mbe(&testdata::iom6()).unwrap();
        let text = render_mbe(&m);
        match parse_source(&text).unwrap() {
            Loaded::Mbe(back) => assert_eq!(back, m),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn truncated_file_reports_end_of_input() {
        let text = "size 2\nelements 0 1\nunit 1\nzero 0\ntable -> :\n1 1\n";
        assert!(matches!(parse_source(text), Err(IoError::Syntax { .. })));
    }
}
