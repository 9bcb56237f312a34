//! File arguments, where `-` is stdin or stdout.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use anyhow::{Context, Result};
use cbu_core::formats::parse_any;
use cbu_core::{BoxRepresentation, Graph, Orientation};
use serde::Serialize;

pub fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(Path::new(path)).with_context(|| format!("reading {path}"))
    }
}

pub fn write_text(path: &str, text: &str) -> Result<()> {
    if path == "-" {
        let mut out = io::stdout().lock();
        out.write_all(text.as_bytes())?;
        out.flush()?;
        Ok(())
    } else {
        fs::write(path, text).with_context(|| format!("writing {path}"))
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize>(path: &str, value: &T) -> Result<()> {
    write_text(path, &to_json(value)?)
}

/// Any graph format; an orientation is read as its underlying graph.
pub fn read_graph(path: &str) -> Result<Graph> {
    let text = read_text(path)?;
    Ok(parse_any(&text).with_context(|| format!("parsing graph from {path}"))?.into_graph())
}

pub fn read_orientation(path: &str) -> Result<Orientation> {
    let text = read_text(path)?;
    Ok(parse_any(&text)
        .and_then(|p| p.into_orientation())
        .with_context(|| format!("parsing orientation from {path}"))?)
}

pub fn read_representation(path: &str) -> Result<BoxRepresentation> {
    let text = read_text(path)?;
    serde_json::from_str(&text).with_context(|| format!("parsing representation from {path}"))
}
