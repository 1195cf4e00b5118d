//! Matrix and graph text files.
//!
//! Matrix file: `#` comment lines, a header `<rows> <cols>`, then
//! `rows × cols` whitespace-separated literals in row-major order.
//!
//! Graph file: `#` comment lines, a header `<node_count>`, then one
//! `<from> <to> <literal>` edge per line.

use std::io::Read;

use crate::error::{Error, ParseError, Result};
use crate::literal::{format_nn, parse_nn};
use crate::matrix::NeutroMatrix;
use crate::number::NeutroNumber;
use crate::solver::WeightedDigraph;

struct Token<'a> {
    text: &'a str,
    line: usize,
    offset: usize,
}

/// Whitespace-separated tokens of the data lines, with 1-based line numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<Token<'_>>)> {
    text.lines().enumerate().filter_map(|(idx, line)| {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let base = line.as_ptr() as usize;
        let tokens = line
            .split_whitespace()
            .map(|t| Token {
                text: t,
                line: idx + 1,
                offset: t.as_ptr() as usize - base,
            })
            .collect();
        Some((idx + 1, tokens))
    })
}

fn parse_count(tok: &Token<'_>, what: &str) -> Result<usize, ParseError> {
    match tok.text.parse::<usize>() {
        Ok(v) if v > 0 && tok.text.bytes().all(|c| c.is_ascii_digit()) => Ok(v),
        _ => Err(ParseError::at_line(
            tok.line,
            tok.offset,
            format!("expected a positive integer {what}, found {:?}", tok.text),
        )),
    }
}

fn parse_index(tok: &Token<'_>, what: &str) -> Result<usize, ParseError> {
    if !tok.text.bytes().all(|c| c.is_ascii_digit()) {
        return Err(ParseError::at_line(
            tok.line,
            tok.offset,
            format!("expected a node index for {what}, found {:?}", tok.text),
        ));
    }
    tok.text.parse::<usize>().map_err(|_| {
        ParseError::at_line(
            tok.line,
            tok.offset,
            format!("node index {:?} too large", tok.text),
        )
    })
}

fn parse_entry(tok: &Token<'_>) -> Result<NeutroNumber, ParseError> {
    parse_nn(tok.text).map_err(|e| e.within(tok.line, tok.offset))
}

fn parse_header(line: usize, tokens: &[Token<'_>]) -> Result<(usize, usize)> {
    if tokens.len() != 2 {
        return Err(ParseError::at_line(
            line,
            tokens.first().map_or(0, |t| t.offset),
            "expected a header line \"<rows> <cols>\"",
        )
        .into());
    }
    Ok((
        parse_count(&tokens[0], "row count")?,
        parse_count(&tokens[1], "column count")?,
    ))
}

pub fn parse_matrix(text: &str) -> Result<NeutroMatrix> {
    let mut lines = data_lines(text);
    let Some((line, header)) = lines.next() else {
        return Err(ParseError::at_line(1, 0, "missing header line \"<rows> <cols>\"").into());
    };
    let (rows, cols) = parse_header(line, &header)?;
    let mut entries = Vec::with_capacity(rows * cols);
    for (_, tokens) in lines {
        for tok in &tokens {
            entries.push(parse_entry(tok)?);
        }
    }
    if entries.len() != rows * cols {
        return Err(Error::DimensionMismatch(format!(
            "header declares {rows}x{cols} = {} entries, found {}",
            rows * cols,
            entries.len()
        )));
    }
    NeutroMatrix::new(rows, cols, entries)
}

/// Several matrix blocks back to back, each with its own header.
pub fn parse_matrix_blocks(text: &str) -> Result<Vec<NeutroMatrix>> {
    let mut blocks = Vec::new();
    let mut current: Option<(usize, usize, Vec<NeutroNumber>)> = None;
    for (line, tokens) in data_lines(text) {
        match current.as_mut() {
            None => {
                let (rows, cols) = parse_header(line, &tokens)?;
                current = Some((rows, cols, Vec::with_capacity(rows * cols)));
            }
            Some((rows, cols, entries)) => {
                let need = *rows * *cols;
                if entries.len() + tokens.len() > need {
                    return Err(Error::DimensionMismatch(format!(
                        "line {line}: block declares {rows}x{cols} = {need} entries, found more"
                    )));
                }
                for tok in &tokens {
                    entries.push(parse_entry(tok)?);
                }
            }
        }
        if let Some((rows, cols, entries)) = current.take() {
            if entries.len() == rows * cols {
                blocks.push(NeutroMatrix::new(rows, cols, entries)?);
            } else {
                current = Some((rows, cols, entries));
            }
        }
    }
    if let Some((rows, cols, entries)) = current {
        return Err(Error::DimensionMismatch(format!(
            "last block declares {rows}x{cols} = {} entries, found {}",
            rows * cols,
            entries.len()
        )));
    }
    Ok(blocks)
}

pub fn read_matrix(mut reader: impl Read) -> Result<NeutroMatrix> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    parse_matrix(&text)
}

/// Canonical matrix file: header line, then one row per line.
pub fn write_matrix(m: &NeutroMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(format_nn).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_graph(text: &str) -> Result<WeightedDigraph> {
    let mut lines = data_lines(text);
    let Some((line, header)) = lines.next() else {
        return Err(ParseError::at_line(1, 0, "missing header line \"<node_count>\"").into());
    };
    if header.len() != 1 {
        return Err(ParseError::at_line(
            line,
            header[0].offset,
            "expected a header line \"<node_count>\"",
        )
        .into());
    }
    let node_count = parse_count(&header[0], "node count")?;
    let mut graph = WeightedDigraph::new(node_count)?;
    for (line, tokens) in lines {
        if tokens.len() != 3 {
            return Err(ParseError::at_line(
                line,
                tokens[0].offset,
                format!(
                    "expected \"<from> <to> <weight>\", found {} fields",
                    tokens.len()
                ),
            )
            .into());
        }
        let from = parse_index(&tokens[0], "from")?;
        let to = parse_index(&tokens[1], "to")?;
        for (idx, tok) in [(from, &tokens[0]), (to, &tokens[1])] {
            if idx >= node_count {
                return Err(ParseError::at_line(
                    line,
                    tok.offset,
                    format!("node {idx} out of range for {node_count} nodes"),
                )
                .into());
            }
        }
        let weight = parse_entry(&tokens[2])?;
        if graph.weight(from, to).is_some() {
            return Err(ParseError::at_line(
                line,
                tokens[0].offset,
                format!("duplicate edge {from} -> {to}"),
            )
            .into());
        }
        graph.add_edge(from, to, weight)?;
    }
    Ok(graph)
}

pub fn read_graph(mut reader: impl Read) -> Result<WeightedDigraph> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    parse_graph(&text)
}
