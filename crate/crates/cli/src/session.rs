//! File I/O bookkeeping for one command run and the reproduction manifest.
//!
//! Every file read or written goes through [`Session`], which records its
//! SHA-256. When a run wrote at least one file, a manifest is placed next to
//! the first output as `<output>.manifest.json`.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use expander_core::{EdgeList, Graph};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

pub const MANIFEST_SUFFIX: &str = ".manifest.json";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FileRecord {
    pub role: String,
    pub path: PathBuf,
    pub sha256: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    pub command: String,
    /// Arguments after the program name, with file paths made absolute.
    pub argv: Vec<String>,
    pub config: serde_json::Value,
    pub inputs: Vec<FileRecord>,
    pub outputs: Vec<FileRecord>,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

pub fn absolute(path: &Path) -> PathBuf {
    std::path::absolute(path).unwrap_or_else(|_| path.to_path_buf())
}

pub fn read_bytes(path: &Path) -> CliResult<Vec<u8>> {
    fs::read(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

#[derive(Debug, Default)]
pub struct Session {
    inputs: Vec<FileRecord>,
    outputs: Vec<FileRecord>,
}

impl Session {
    pub fn read_graph(&mut self, path: &Path) -> CliResult<Graph> {
        let bytes = read_bytes(path)?;
        let text = String::from_utf8(bytes.clone()).map_err(|_| expander_core::Error::Parse {
            line: 0,
            message: "file is not valid UTF-8".into(),
        })?;
        let graph = Graph::from_edge_list(&EdgeList::parse(&text)?)?;
        self.inputs.push(FileRecord {
            role: "graph".into(),
            path: path.to_path_buf(),
            sha256: sha256_hex(&bytes),
        });
        Ok(graph)
    }

    /// Writes `bytes` to `path`, or to stdout when no path is given.
    pub fn emit(&mut self, role: &str, path: Option<&Path>, bytes: &[u8]) -> CliResult<()> {
        match path {
            Some(p) => {
                fs::write(p, bytes).map_err(|source| CliError::Write {
                    path: p.to_path_buf(),
                    source,
                })?;
                self.outputs.push(FileRecord {
                    role: role.into(),
                    path: p.to_path_buf(),
                    sha256: sha256_hex(bytes),
                });
            }
            None => {
                let mut out = std::io::stdout().lock();
                out.write_all(bytes)
                    .and_then(|_| out.flush())
                    .map_err(|source| CliError::Write {
                        path: PathBuf::from("<stdout>"),
                        source,
                    })?;
            }
        }
        Ok(())
    }

    /// Writes the manifest next to the first output file, if any.
    pub fn finish(self, command: &str, argv: &[String], config: serde_json::Value) -> CliResult<()> {
        let Some(first) = self.outputs.first() else {
            return Ok(());
        };
        let manifest_path = PathBuf::from(format!("{}{MANIFEST_SUFFIX}", first.path.display()));
        let absolutize = |records: &[FileRecord]| -> Vec<FileRecord> {
            records
                .iter()
                .map(|r| FileRecord {
                    path: absolute(&r.path),
                    ..r.clone()
                })
                .collect()
        };
        let mentioned: Vec<&PathBuf> = self.inputs.iter().chain(&self.outputs).map(|r| &r.path).collect();
        let argv = argv
            .iter()
            .map(|a| {
                if mentioned.iter().any(|p| p.as_os_str() == a.as_str()) {
                    absolute(Path::new(a)).display().to_string()
                } else {
                    a.clone()
                }
            })
            .collect();
        let manifest = Manifest {
            tool: "expander".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            command: command.into(),
            argv,
            config,
            inputs: absolutize(&self.inputs),
            outputs: absolutize(&self.outputs),
        };
        let mut text = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
        text.push('\n');
        fs::write(&manifest_path, text).map_err(|source| CliError::Write {
            path: manifest_path,
            source,
        })
    }
}

pub fn load_manifest(path: &Path) -> CliResult<Manifest> {
    let bytes = read_bytes(path)?;
    serde_json::from_slice(&bytes).map_err(|e| {
        CliError::Core(expander_core::Error::Parse {
            line: e.line(),
            message: format!("manifest: {e}"),
        })
    })
}
