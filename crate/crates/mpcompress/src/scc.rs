//! The scc2020 chain complex text format.
//!
//! ```text
//! scc2020
//! # comments and blank lines are ignored
//! 2                 number of parameters
//! 3 7 5             generator counts, highest dimension first
//! 2 1 ; 0 1 4       one line per generator: x y ; boundary indices into the next block
//! ...
//! 0 0 ;             the last block has empty boundaries
//! ```

use std::collections::BTreeMap;
use std::io::{self, Read, Write};

use mpcompress_core::{ChainComplex, Error as CoreError, Grade, GradeTokens, SparseColumn};
use thiserror::Error;

use crate::decimal::DecimalKey;

pub const MAGIC: &str = "scc2020";

#[derive(Debug, Error)]
pub enum SccError {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    /// Malformed text: syntax, counts or indices.
    #[error("line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    /// Well-formed text that does not describe a chain complex of free modules.
    #[error("line {line}, column {column}: {message}")]
    Validation { line: usize, column: usize, message: String },
}

impl SccError {
    /// Process exit code: 1 for I/O and parse errors, 2 for validation errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            SccError::Io(_) | SccError::Parse { .. } => 1,
            SccError::Validation { .. } => 2,
        }
    }

    pub fn position(&self) -> Option<(usize, usize)> {
        match self {
            SccError::Io(_) => None,
            SccError::Parse { line, column, .. } | SccError::Validation { line, column, .. } => Some((*line, *column)),
        }
    }
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> SccError {
    SccError::Parse { line, column, message: message.into() }
}

/// A significant line with its 1-based number.
struct Line<'a> {
    number: usize,
    text: &'a str,
}

/// Tokens with 1-based character columns; whitespace separates and `;` stands alone.
fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    for (col, (i, ch)) in text.char_indices().enumerate() {
        if ch.is_whitespace() || ch == ';' {
            if let Some((c, s)) = start.take() {
                out.push((c, &text[s..i]));
            }
            if ch == ';' {
                out.push((col + 1, &text[i..i + 1]));
            }
        } else if start.is_none() {
            start = Some((col + 1, i));
        }
    }
    if let Some((c, s)) = start {
        out.push((c, &text[s..]));
    }
    out
}

struct RawGenerator {
    line: usize,
    grade_cols: [usize; 2],
    x: DecimalKey,
    y: DecimalKey,
    x_token: String,
    y_token: String,
    boundary: Vec<(usize, usize)>,
}

/// Reads and parses a whole stream.
pub fn read_scc<R: Read>(mut reader: R) -> Result<ChainComplex, SccError> {
    let mut text = String::new();
    reader.read_to_string(&mut text).map_err(|e| {
        if e.kind() == io::ErrorKind::InvalidData {
            parse_err(1, 1, "input is not valid UTF-8")
        } else {
            SccError::Io(e)
        }
    })?;
    parse_scc(&text)
}

/// Parses scc2020 text into a validated, colex-sorted complex whose grades are the
/// ranks of the distinct coordinate values; the original tokens are kept for output.
pub fn parse_scc(text: &str) -> Result<ChainComplex, SccError> {
    let mut lines = text.lines().enumerate().filter_map(|(i, l)| {
        let trimmed = l.trim_start();
        (!trimmed.is_empty() && !trimmed.starts_with('#')).then_some(Line { number: i + 1, text: l })
    });
    let last_line = text.lines().count().max(1);

    let magic = lines.next().ok_or_else(|| parse_err(1, 1, "missing scc2020 header"))?;
    if magic.text.trim() != MAGIC {
        return Err(parse_err(magic.number, 1, format!("expected header `{MAGIC}`")));
    }
    let params = lines.next().ok_or_else(|| parse_err(last_line, 1, "missing number of parameters"))?;
    let ptoks = tokens(params.text);
    if ptoks.len() != 1 {
        return Err(parse_err(params.number, 1, "expected a single number of parameters"));
    }
    match ptoks[0].1.parse::<u64>() {
        Ok(2) => {}
        Ok(n) => return Err(parse_err(params.number, ptoks[0].0, format!("only 2 parameters are supported, got {n}"))),
        Err(_) => return Err(parse_err(params.number, ptoks[0].0, "number of parameters is not an integer")),
    }
    let sizes_line = lines.next().ok_or_else(|| parse_err(last_line, 1, "missing block sizes"))?;
    let sizes: Vec<usize> = tokens(sizes_line.text)
        .into_iter()
        .map(|(c, t)| {
            t.parse::<usize>().map_err(|_| parse_err(sizes_line.number, c, format!("invalid block size `{t}`")))
        })
        .collect::<Result<_, _>>()?;
    if sizes.is_empty() {
        return Err(parse_err(sizes_line.number, 1, "expected at least one block size"));
    }

    let mut blocks: Vec<Vec<RawGenerator>> = Vec::with_capacity(sizes.len());
    for (b, &size) in sizes.iter().enumerate() {
        let next_size = sizes.get(b + 1).copied();
        let mut block = Vec::with_capacity(size);
        for _ in 0..size {
            let line = lines.next().ok_or_else(|| {
                parse_err(last_line, 1, format!("unexpected end of input: block {} needs {size} generators", b + 1))
            })?;
            block.push(parse_generator(&line, next_size)?);
        }
        blocks.push(block);
    }
    if let Some(extra) = lines.next() {
        return Err(parse_err(extra.number, 1, "unexpected content after the last block"));
    }
    build(blocks)
}

fn parse_generator(line: &Line<'_>, next_size: Option<usize>) -> Result<RawGenerator, SccError> {
    let n = line.number;
    let toks = tokens(line.text);
    let Some(semi) = toks.iter().position(|(_, t)| *t == ";") else {
        return Err(parse_err(n, line.text.chars().count() + 1, "expected `;` after the grade"));
    };
    if semi != 2 {
        let col = toks[semi.min(2)].0;
        return Err(parse_err(n, col, "expected exactly two grade values before `;`"));
    }
    let grade = |k: usize| -> Result<DecimalKey, SccError> {
        DecimalKey::parse(toks[k].1)
            .ok_or_else(|| parse_err(n, toks[k].0, format!("invalid grade value `{}`", toks[k].1)))
    };
    let (x, y) = (grade(0)?, grade(1)?);
    let mut boundary = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for &(c, t) in &toks[semi + 1..] {
        if t == ";" {
            return Err(parse_err(n, c, "unexpected second `;`"));
        }
        let Some(limit) = next_size else {
            return Err(parse_err(n, c, "generators of the lowest dimension have no boundary"));
        };
        let i: usize = t.parse().map_err(|_| parse_err(n, c, format!("invalid boundary index `{t}`")))?;
        if i >= limit {
            return Err(parse_err(n, c, format!("boundary index {i} out of range: next block has {limit} generators")));
        }
        if !seen.insert(i) {
            return Err(parse_err(n, c, format!("duplicate boundary index {i}")));
        }
        boundary.push((c, i));
    }
    Ok(RawGenerator {
        line: n,
        grade_cols: [toks[0].0, toks[1].0],
        x,
        y,
        x_token: toks[0].1.to_string(),
        y_token: toks[1].1.to_string(),
        boundary,
    })
}

fn rank_table<'a>(keys: impl Iterator<Item = (&'a DecimalKey, &'a str)>) -> BTreeMap<&'a DecimalKey, (u32, String)> {
    let mut table: BTreeMap<&DecimalKey, (u32, String)> = BTreeMap::new();
    for (k, t) in keys {
        table.entry(k).or_insert_with(|| (0, t.to_string()));
    }
    for (r, v) in table.values_mut().enumerate() {
        v.0 = r as u32;
    }
    table
}

fn build(blocks: Vec<Vec<RawGenerator>>) -> Result<ChainComplex, SccError> {
    let all = || blocks.iter().flatten();
    let xs = rank_table(all().map(|g| (&g.x, g.x_token.as_str())));
    let ys = rank_table(all().map(|g| (&g.y, g.y_token.as_str())));
    let tokens =
        GradeTokens { x: xs.values().map(|v| v.1.clone()).collect(), y: ys.values().map(|v| v.1.clone()).collect() };
    // Blocks are highest dimension first; levels are dimension 0 first.
    let k = blocks.len() - 1;
    let grades: Vec<Vec<Grade>> =
        blocks.iter().rev().map(|b| b.iter().map(|g| Grade::new(xs[&g.x].0, ys[&g.y].0)).collect()).collect();
    for (b, block) in blocks.iter().enumerate().take(k) {
        let n = k - b;
        for (j, g) in block.iter().enumerate() {
            let cg = grades[n][j];
            for &(col, i) in &g.boundary {
                let rg = grades[n - 1][i];
                if !rg.is_below(&cg) {
                    return Err(SccError::Validation {
                        line: g.line,
                        column: col,
                        message: format!(
                            "boundary entry {i} has grade ({}, {}), which is not below the generator's grade ({}, {})",
                            blocks[b + 1][i].x_token,
                            blocks[b + 1][i].y_token,
                            g.x_token,
                            g.y_token
                        ),
                    });
                }
            }
        }
    }
    let boundaries: Vec<Vec<SparseColumn>> = (1..=k)
        .map(|n| {
            blocks[k - n]
                .iter()
                .map(|g| SparseColumn::from_indices(g.boundary.iter().map(|&(_, i)| i).collect()))
                .collect()
        })
        .collect();
    let complex = ChainComplex::new(grades, boundaries).map_err(|e| match e {
        CoreError::NotAComplex { level, column } => {
            let g = &blocks[k - level][column];
            SccError::Validation {
                line: g.line,
                column: g.grade_cols[0],
                message: format!("the boundary of this generator's boundary is nonzero (dimension {level})"),
            }
        }
        other => SccError::Validation { line: 0, column: 0, message: other.to_string() },
    })?;
    let (sorted, _) =
        complex.colex_normalize().map_err(|e| SccError::Validation { line: 0, column: 0, message: e.to_string() })?;
    Ok(sorted.with_tokens(Some(tokens)))
}

fn x_text(c: &ChainComplex, g: Grade) -> String {
    c.tokens().and_then(|t| t.x_token(g.x)).map_or_else(|| g.x.to_string(), str::to_string)
}

fn y_text(c: &ChainComplex, g: Grade) -> String {
    c.tokens().and_then(|t| t.y_token(g.y)).map_or_else(|| g.y.to_string(), str::to_string)
}

/// Writes the canonical rendering: single spaces, ascending indices, LF line ends.
pub fn write_scc<W: Write>(complex: &ChainComplex, out: &mut W) -> io::Result<()> {
    let k = complex.length();
    writeln!(out, "{MAGIC}")?;
    writeln!(out, "2")?;
    let sizes: Vec<String> = (0..=k).rev().map(|n| complex.level_size(n).to_string()).collect();
    writeln!(out, "{}", sizes.join(" "))?;
    let mut line = String::new();
    for n in (0..=k).rev() {
        for (j, &g) in complex.level_grades(n).iter().enumerate() {
            line.clear();
            line.push_str(&x_text(complex, g));
            line.push(' ');
            line.push_str(&y_text(complex, g));
            line.push_str(" ;");
            for i in complex.boundary_of(n, j).iter() {
                line.push(' ');
                line.push_str(&i.to_string());
            }
            line.push('\n');
            out.write_all(line.as_bytes())?;
        }
    }
    Ok(())
}

pub fn render_scc(complex: &ChainComplex) -> String {
    let mut buf = Vec::new();
    write_scc(complex, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("output is UTF-8")
}
