//! Input resolution: presets, files, inline text, or stdin, with content
//! sniffing between the presentation grammar and complex files.

use std::fmt;
use std::io::Read;
use std::path::{Path, PathBuf};

use acyclo_core::{Presentation, SimplicialComplex};

use crate::parse::complex::parse_complex;
use crate::parse::presentation::parse_presentation;
use crate::presets::{self, Preset};

/// An input error; always maps to exit code 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for CliError {}

impl From<crate::parse::ParseError> for CliError {
    fn from(e: crate::parse::ParseError) -> Self {
        CliError(e.to_string())
    }
}

impl From<acyclo_core::Error> for CliError {
    fn from(e: acyclo_core::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError(e.to_string())
    }
}

pub enum Loaded {
    Complex(SimplicialComplex),
    Presentation(Presentation),
}

/// Where an input comes from; at most one of the fields is used, in the
/// order preset, file, text, positional, stdin.
#[derive(Default)]
pub struct Source {
    pub positional: Option<String>,
    pub preset: Option<String>,
    pub file: Option<PathBuf>,
    pub text: Option<String>,
}

impl Source {
    pub fn load(&self) -> Result<Loaded, CliError> {
        if let Some(name) = &self.preset {
            return load_preset(name);
        }
        if let Some(path) = &self.file {
            return sniff(&read_file(path)?);
        }
        if let Some(text) = &self.text {
            return sniff(text);
        }
        if let Some(spec) = &self.positional {
            return load_spec(spec);
        }
        sniff(&read_stdin()?)
    }
}

/// Resolves a bare argument: `-` is stdin, an existing path is a file,
/// otherwise a preset name.
pub fn load_spec(spec: &str) -> Result<Loaded, CliError> {
    if spec == "-" {
        return sniff(&read_stdin()?);
    }
    if Path::new(spec).exists() {
        return sniff(&read_file(Path::new(spec))?);
    }
    load_preset(spec)
}

fn load_preset(name: &str) -> Result<Loaded, CliError> {
    match presets::lookup(name) {
        Some(Preset::Complex(k)) => Ok(Loaded::Complex(k)),
        Some(Preset::Presentation(p)) => Ok(Loaded::Presentation(p)),
        None => Err(CliError(format!(
            "`{name}` is neither an existing file nor a preset ({})",
            presets::PRESET_SUMMARY
        ))),
    }
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError(format!("cannot read {}: {e}", path.display())))
}

pub fn read_stdin() -> Result<String, CliError> {
    let mut buf = String::new();
    std::io::stdin().read_to_string(&mut buf)?;
    Ok(buf)
}

/// Presentations start with `<`; anything else is a complex file.
fn sniff(text: &str) -> Result<Loaded, CliError> {
    if text.trim_start().starts_with('<') {
        Ok(Loaded::Presentation(parse_presentation(text)?.presentation))
    } else {
        Ok(Loaded::Complex(parse_complex(text)?))
    }
}

impl Loaded {
    pub fn require_complex(self, what: &str) -> Result<SimplicialComplex, CliError> {
        match self {
            Loaded::Complex(k) => Ok(k),
            Loaded::Presentation(_) => Err(CliError(format!(
                "{what} needs a simplicial complex, but the input is a presentation"
            ))),
        }
    }

    pub fn require_presentation(self, what: &str) -> Result<Presentation, CliError> {
        match self {
            Loaded::Presentation(p) => Ok(p),
            Loaded::Complex(_) => Err(CliError(format!(
                "{what} needs a group presentation, but the input is a complex"
            ))),
        }
    }
}
