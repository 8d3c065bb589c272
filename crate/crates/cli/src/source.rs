use std::path::PathBuf;

use clap::Args;
use toeplitz_core::toeplitz::family_parameter;
use toeplitz_core::{build_family, build_toeplitz, Graph, ToeplitzSpec};

use crate::error::CliError;

#[derive(Debug, Clone, Args)]
pub struct GraphSource {
    /// Family member T_2n(W) with parameter N
    #[arg(
        long,
        value_name = "N",
        conflicts_with_all = ["toeplitz", "input"],
        required_unless_present_any = ["toeplitz", "input"]
    )]
    pub family: Option<usize>,
    /// Toeplitz graph on M vertices (use with --jumps)
    #[arg(long, value_name = "M", conflicts_with = "input", requires = "jumps")]
    pub toeplitz: Option<usize>,
    /// JSON edge list file
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Comma-separated jump list for --toeplitz
    #[arg(long, value_name = "LIST", value_delimiter = ',', requires = "toeplitz")]
    pub jumps: Vec<usize>,
}

/// A loaded graph with its display id and family parameter, if any.
pub struct Loaded {
    pub graph: Graph,
    pub id: String,
    pub family: Option<usize>,
}

pub fn family_id(n: usize) -> String {
    format!("T_{}(W)", 2 * n)
}

pub fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn load_file(path: &PathBuf) -> Result<Graph, CliError> {
    Ok(Graph::from_json_str(&read_file(path)?)?)
}

impl GraphSource {
    pub fn load(&self) -> Result<Loaded, CliError> {
        if let Some(n) = self.family {
            return Ok(Loaded { graph: build_family(n)?, id: family_id(n), family: Some(n) });
        }
        if let Some(m) = self.toeplitz {
            let spec = ToeplitzSpec::new(m, self.jumps.iter().copied())?;
            let graph = build_toeplitz(&spec)?;
            let jumps: Vec<String> = spec.jumps().map(|j| j.to_string()).collect();
            let id = format!("T_{m}({{{}}})", jumps.join(","));
            return Ok(Loaded { family: family_parameter(&graph), graph, id });
        }
        let path = self.input.as_ref().expect("clap enforces one source");
        let graph = load_file(path)?;
        Ok(Loaded { family: family_parameter(&graph), graph, id: format!("file:{}", path.display()) })
    }
}
