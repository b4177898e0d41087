use std::fmt;
use std::io::Read;

use polyclar::PolyominoGraph;

use crate::{Format, Options};

#[derive(Debug)]
pub enum CliError {
    Io(String, std::io::Error),
    Graph(polyclar::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{path}: {e}"),
            CliError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl From<polyclar::Error> for CliError {
    fn from(e: polyclar::Error) -> Self {
        CliError::Graph(e)
    }
}

pub fn read_text(path: &str) -> Result<String, CliError> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| CliError::Io("stdin".into(), e))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.into(), e))?;
    }
    Ok(text)
}

pub fn parse_graph(text: &str, opts: &Options) -> Result<PolyominoGraph, CliError> {
    let format = opts.format.unwrap_or(if text.trim_start().starts_with('{') { Format::Json } else { Format::Ascii });
    let mode = opts.mode.into();
    Ok(match format {
        Format::Ascii => PolyominoGraph::parse_ascii_with(text, mode)?,
        Format::Json => PolyominoGraph::from_json_with(text, mode)?,
    })
}

pub fn read_graph(opts: &Options) -> Result<PolyominoGraph, CliError> {
    parse_graph(&read_text(&opts.input)?, opts)
}
