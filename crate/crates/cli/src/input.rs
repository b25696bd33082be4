//! Turning flags and input files into library values, with diagnostics
//! that name the flag or field at fault.

use std::fs;
use std::path::Path;

use clap::Args;
use hecke_core::hecke_algebra::{algebra, HeckeAlgebra};
use hecke_core::label_params::{LabelFunction, QBase};
use hecke_core::root_data::{parse_components, BasedRootDatum, DatumJson, Family, RootSystem};
use hecke_core::serde_rat::parse_rat;
use hecke_core::Rat;
use serde::de::DeserializeOwned;
use serde::Deserialize;

/// A failure to make sense of the input; exits with status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl UsageError {
    pub fn at(field: &str, e: impl std::fmt::Display) -> Self {
        UsageError(format!("{field}: {e}"))
    }
}

pub type CliResult<T> = std::result::Result<T, UsageError>;

/// Maps a library error to a diagnostic naming `field`.
pub fn at<T>(field: &str, r: hecke_core::Result<T>) -> CliResult<T> {
    r.map_err(|e| UsageError::at(field, e))
}

pub fn rat(field: &str, s: &str) -> CliResult<Rat> {
    parse_rat(s).map_err(|e| UsageError::at(field, e))
}

/// Reads a JSON file; errors carry the path of the offending field.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| UsageError::at(&path.display().to_string(), e))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let p = e.path().to_string();
        let field = if p == "." { "<root>".to_string() } else { p };
        UsageError(format!("{}: field `{field}`: {}", path.display(), e.inner()))
    })
}

#[derive(Args, Debug, Clone, Default)]
pub struct RootArgs {
    /// Family letter used with --rank, or a full name such as B3 or A1xB2
    #[arg(long = "type")]
    pub ty: Option<String>,
    #[arg(long)]
    pub rank: Option<usize>,
    /// One label per orbit, long before short, then an optional lambda* for the last orbit
    #[arg(long)]
    pub labels: Option<String>,
    /// The labels are exponents of q_F^r
    #[arg(long = "base-exp")]
    pub base_exp: Option<String>,
}

impl RootArgs {
    pub fn type_name(&self) -> CliResult<String> {
        let ty = self
            .ty
            .as_deref()
            .ok_or_else(|| UsageError("--type: required".into()))?;
        Ok(match self.rank {
            Some(r) => format!("{}{r}", ty.trim()),
            None => ty.trim().to_string(),
        })
    }

    pub fn root_system(&self) -> CliResult<RootSystem> {
        let name = self.type_name()?;
        let comps = at("--type", parse_components(&name))?;
        at("--type", RootSystem::new(&comps))
    }

    pub fn base(&self) -> CliResult<QBase> {
        match &self.base_exp {
            None => Ok(QBase::formal()),
            Some(s) => at("--base-exp", QBase::formal().with_exp(rat("--base-exp", s)?)),
        }
    }

    pub fn label_function(&self, rs: &RootSystem) -> CliResult<LabelFunction> {
        let labels = self
            .labels
            .as_deref()
            .ok_or_else(|| UsageError("--labels: required".into()))?;
        Ok(at("--labels", LabelFunction::parse(rs, labels))?.with_base(self.base()?))
    }
}

#[derive(Args, Debug, Clone)]
pub struct AlgebraArgs {
    #[command(flatten)]
    pub root: RootArgs,
    /// Lattice: adjoint, simply-connected (sc) or gl (type A only)
    #[arg(long, default_value = "adjoint")]
    pub datum: String,
    /// File with {"datum": {...}, "labels": "..."} instead of the flags
    #[arg(long)]
    pub json: Option<std::path::PathBuf>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    datum: DatumJson,
    labels: String,
}

impl AlgebraArgs {
    pub fn datum(&self) -> CliResult<(BasedRootDatum, LabelFunction)> {
        if let Some(path) = &self.json {
            let f: AlgebraFile = read_json(path)?;
            let d = at("datum", BasedRootDatum::from_json(&f.datum))?;
            let lf = at("labels", LabelFunction::parse(d.root_system(), &f.labels))?;
            return Ok((d, lf));
        }
        let rs = self.root.root_system()?;
        let lf = self.root.label_function(&rs)?;
        let d = match self.datum.as_str() {
            "adjoint" => BasedRootDatum::adjoint(rs),
            "sc" | "simply-connected" => BasedRootDatum::simply_connected(rs),
            "gl" => match rs.components() {
                [c] if c.family == Family::A => at("--datum", BasedRootDatum::gl(c.rank + 1))?,
                _ => return Err(UsageError("--datum: gl needs a single type A component".into())),
            },
            other => {
                return Err(UsageError(format!(
                    "--datum: `{other}` is not adjoint, simply-connected or gl"
                )))
            }
        };
        Ok((d, lf))
    }

    pub fn algebra(&self) -> CliResult<HeckeAlgebra> {
        let (d, lf) = self.datum()?;
        at("--labels", algebra(d, lf))
    }
}
