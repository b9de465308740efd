//! Resolution of command-line arguments into core objects: Cartan data,
//! highest weight, `τ`, `qset`, and the built stratification poset.
//!
//! Words use 1-based simple-root indices separated by `.` or `,`; `"id"` is
//! the identity and `"w0"` the longest element. `--qset auto` derives the
//! parabolic from the zero coordinates of `λ`.

use std::collections::BTreeSet;
use std::path::PathBuf;

use clap::Args;
use lsfan_core::root_system::CartanData;
use lsfan_core::weyl::WeylElement;
use lsfan_core::{StratPoset, Weight};

use crate::error::CliError;

#[derive(Debug, Args)]
pub struct JobArgs {
    /// Named Cartan type: A1..A4, B2, B3, C3, D4, G2.
    #[arg(long = "type")]
    pub type_name: Option<String>,

    /// Raw Cartan matrix as JSON rows, e.g. "[[2,-1],[-3,2]]"
    /// (the (i,j) entry pairs the simple root j against the simple coroot i).
    #[arg(long)]
    pub cartan: Option<String>,

    /// Expected rank; validated against the type or matrix.
    #[arg(long)]
    pub rank: Option<usize>,

    /// Highest weight in fundamental coordinates, comma-separated integers.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,

    /// τ as a word of 1-based simple indices ("1.2.1"), or "w0" / "id".
    #[arg(long, default_value = "w0")]
    pub tau: String,

    /// "auto" (zero coordinates of λ) or comma-separated 1-based indices.
    #[arg(long, default_value = "auto")]
    pub qset: String,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format.
    #[arg(long, default_value = "json")]
    pub format: String,

    /// Write output to a file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl JobArgs {
    pub fn cartan_data(&self) -> Result<CartanData, CliError> {
        let cd = match (&self.type_name, &self.cartan) {
            (Some(name), None) => CartanData::named(name)?,
            (None, Some(matrix)) => {
                let rows: Vec<Vec<i64>> = serde_json::from_str(matrix)?;
                CartanData::from_matrix(rows)?
            }
            (Some(_), Some(_)) => {
                return Err(CliError::validation("give either --type or --cartan, not both"))
            }
            (None, None) => {
                return Err(CliError::validation("one of --type or --cartan is required"))
            }
        };
        if let Some(rank) = self.rank {
            if rank != cd.rank() {
                return Err(CliError::validation(format!(
                    "--rank {rank} does not match rank {} of the given type",
                    cd.rank()
                )));
            }
        }
        Ok(cd)
    }

    pub fn lambda(&self, cd: &CartanData) -> Result<Weight, CliError> {
        let coords = parse_i64_list(&self.lambda)?;
        if coords.len() != cd.rank() {
            return Err(CliError::validation(format!(
                "--lambda has {} coordinates, rank is {}",
                coords.len(),
                cd.rank()
            )));
        }
        Ok(Weight::from_i64(&coords))
    }

    pub fn tau(&self, cd: &CartanData) -> Result<WeylElement, CliError> {
        match self.tau.as_str() {
            "w0" => Ok(WeylElement::longest(cd)),
            _ => {
                let word = parse_word(&self.tau, cd.rank())?;
                Ok(WeylElement::from_word(cd, &word)?)
            }
        }
    }

    pub fn qset(&self, cd: &CartanData) -> Result<Option<BTreeSet<usize>>, CliError> {
        if self.qset == "auto" {
            return Ok(None);
        }
        let mut qset = BTreeSet::new();
        if !self.qset.trim().is_empty() {
            for part in self.qset.split(',') {
                qset.insert(parse_index(part.trim(), cd.rank())?);
            }
        }
        Ok(Some(qset))
    }

    /// Builds the stratification poset for the resolved job.
    pub fn build_poset(&self) -> Result<StratPoset, CliError> {
        let cd = self.cartan_data()?;
        let lambda = self.lambda(&cd)?;
        let tau = self.tau(&cd)?;
        let qset = self.qset(&cd)?;
        Ok(StratPoset::build(&cd, &lambda, &tau, qset.as_ref())?)
    }
}

fn parse_i64_list(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| CliError::validation(format!("not an integer: \"{part}\"")))
        })
        .collect()
}

/// Parses a 1-based index into the 0-based internal form.
pub fn parse_index(part: &str, rank: usize) -> Result<usize, CliError> {
    let i: usize = part
        .parse()
        .map_err(|_| CliError::validation(format!("not an index: \"{part}\"")))?;
    if i == 0 || i > rank {
        return Err(CliError::validation(format!(
            "index {i} out of range 1..={rank}"
        )));
    }
    Ok(i - 1)
}

/// Parses `"id"` or a dot/comma-separated word of 1-based indices.
pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>, CliError> {
    let trimmed = s.trim();
    if trimmed == "id" || trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(['.', ','])
        .map(|part| parse_index(part.trim(), rank))
        .collect()
}

impl OutputArgs {
    /// Writes the rendered output to the file or standard output.
    pub fn write(&self, body: &str) -> Result<(), CliError> {
        match &self.out {
            Some(path) => {
                std::fs::write(path, body)?;
            }
            None => {
                print!("{body}");
            }
        }
        Ok(())
    }
}
