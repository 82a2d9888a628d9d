use std::fs;
use std::path::Path;

use adjvol_core::graph::parse_edge_list;
use adjvol_core::{Family, Graph};

use crate::CliError;

/// Resolves a graph argument. Anything with a path separator is a file;
/// otherwise family syntax is tried first and an existing file second.
pub fn load_graph(arg: &str) -> Result<Graph, CliError> {
    let looks_like_path = arg.contains('/') || arg.contains(std::path::MAIN_SEPARATOR);
    if looks_like_path {
        return read_file(arg);
    }
    match arg.parse::<Family>() {
        Ok(fam) => fam
            .build()
            .map_err(|e| CliError::Parse(format!("{arg}: {e}"))),
        Err(fam_err) if Path::new(arg).is_file() => read_file(arg).map_err(|e| match e {
            CliError::Parse(msg) => CliError::Parse(format!("{msg} (as family: {fam_err})")),
            other => other,
        }),
        Err(fam_err) => Err(CliError::Parse(format!("{arg}: {fam_err}"))),
    }
}

fn read_file(path: &str) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Parse(format!("{path}: {e}")))?;
    parse_edge_list(&text).map_err(|e| CliError::Parse(format!("{path}: {e}")))
}
