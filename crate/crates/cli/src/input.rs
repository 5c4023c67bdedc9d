use std::path::{Path, PathBuf};

use tableau_lab::{Tableau, TableauError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Tableau { path: PathBuf, source: TableauError },
    #[error("bad --params {0:?}: expected w,n,k")]
    Params(String),
}

/// Reads a tableau in the `{"width":..,"columns":[..]}` format and checks
/// that it is at least semistandard.
pub fn parse_tableau_file(path: &Path) -> Result<Tableau, InputError> {
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.to_owned(),
        source,
    })?;
    let wrap = |source| InputError::Tableau {
        path: path.to_owned(),
        source,
    };
    let t = Tableau::from_json(&text).map_err(wrap)?;
    t.require_semistandard().map_err(wrap)?;
    Ok(t)
}

/// `"w,n,k"` as used by `biject --params`.
pub fn parse_params(s: &str) -> Result<(usize, usize, i64), InputError> {
    let bad = || InputError::Params(s.to_owned());
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [w, n, k] = parts.as_slice() else {
        return Err(bad());
    };
    Ok((
        w.parse().map_err(|_| bad())?,
        n.parse().map_err(|_| bad())?,
        k.parse().map_err(|_| bad())?,
    ))
}
