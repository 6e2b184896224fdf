use std::io::Read;
use std::path::Path;

use anyhow::{Context, Result};
use clap::ValueEnum;
use comb_core::{parse_edgelist, parse_graph6, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Graph6,
    Edgelist,
}

/// The file's text and raw bytes; `-` reads standard input.
pub fn read_source(path: &Path) -> Result<(String, Vec<u8>)> {
    let mut bytes = Vec::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_end(&mut bytes).context("reading stdin")?;
    } else {
        bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    }
    let text = String::from_utf8(bytes.clone()).with_context(|| format!("{}: not UTF-8", path.display()))?;
    Ok((text, bytes))
}

/// Edge lists start with a line of two integers; anything else is graph6.
pub fn detect(text: &str) -> Format {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(line) if line.split_whitespace().all(|t| t.parse::<usize>().is_ok()) => Format::Edgelist,
        _ => Format::Graph6,
    }
}

pub fn read_graph(text: &str, format: Option<Format>) -> Result<(Graph, Format)> {
    let format = format.unwrap_or_else(|| detect(text));
    let g = match format {
        Format::Graph6 => parse_graph6(text)?,
        Format::Edgelist => parse_edgelist(text)?,
    };
    Ok((g, format))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detection() {
        assert_eq!(detect("Ch\n"), Format::Graph6);
        assert_eq!(detect("4 3\n0 1\n1 2\n2 3\n"), Format::Edgelist);
        assert_eq!(detect("# header\n3 0\n"), Format::Edgelist);
        assert_eq!(detect(">>graph6<<Bw"), Format::Graph6);
    }
}
