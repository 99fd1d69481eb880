//! JSON form of a windowed comodule. Loading re-runs full validation.

use serde::{Deserialize, Serialize};
use steenrod_core::comodule::{ComoduleError, ComoduleWindow, Side};
use steenrod_core::dual_hopf::{DualMonomial, DualSpec, GENS};

pub const FORMAT_TAG: &str = "steenrod-comodule-v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub label: String,
    pub degree: u32,
}

/// One term c ⊗ y: ζ-exponents of c (trailing zeros dropped) and the index of y.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub zeta: Vec<u16>,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComoduleFile {
    pub format: String,
    pub coalgebra: String,
    pub window: u32,
    pub side: String,
    pub basis: Vec<BasisEntry>,
    pub coaction: Vec<Vec<Term>>,
}

#[derive(Debug, thiserror::Error)]
pub enum ComoduleJsonError {
    #[error("unsupported format tag {0:?}")]
    Format(String),
    #[error("coalgebra {0:?} has no parseable name")]
    Coalgebra(String),
    #[error("side must be \"left\" or \"right\", got {0:?}")]
    Side(String),
    #[error("coaction table has {found} rows for {expected} basis elements")]
    Rows { expected: usize, found: usize },
    #[error("term exponent vector longer than {GENS}")]
    Exponents,
    #[error(transparent)]
    Invalid(#[from] ComoduleError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub fn to_file(m: &ComoduleWindow) -> Result<ComoduleFile, ComoduleJsonError> {
    let name = m.coalgebra().name().to_string();
    if DualSpec::parse(&name).ok().as_ref() != Some(m.coalgebra()) {
        return Err(ComoduleJsonError::Coalgebra(name));
    }
    let coaction = (0..m.dim())
        .map(|x| {
            m.coaction_terms(x)
                .iter()
                .map(|(c, y)| {
                    let mut zeta = c.exponents();
                    while zeta.last() == Some(&0) {
                        zeta.pop();
                    }
                    Term { zeta, to: *y }
                })
                .collect()
        })
        .collect();
    Ok(ComoduleFile {
        format: FORMAT_TAG.into(),
        coalgebra: name,
        window: m.window(),
        side: match m.side() {
            Side::Left => "left".into(),
            Side::Right => "right".into(),
        },
        basis: m
            .labels()
            .iter()
            .zip(m.degrees())
            .map(|(l, &d)| BasisEntry { label: l.clone(), degree: d })
            .collect(),
        coaction,
    })
}

pub fn from_file(f: &ComoduleFile) -> Result<ComoduleWindow, ComoduleJsonError> {
    if f.format != FORMAT_TAG {
        return Err(ComoduleJsonError::Format(f.format.clone()));
    }
    let spec = DualSpec::parse(&f.coalgebra).map_err(|_| ComoduleJsonError::Coalgebra(f.coalgebra.clone()))?;
    let side = match f.side.as_str() {
        "left" => Side::Left,
        "right" => Side::Right,
        other => return Err(ComoduleJsonError::Side(other.into())),
    };
    if f.coaction.len() != f.basis.len() {
        return Err(ComoduleJsonError::Rows { expected: f.basis.len(), found: f.coaction.len() });
    }
    let mut coaction = Vec::with_capacity(f.coaction.len());
    for row in &f.coaction {
        let mut terms = Vec::with_capacity(row.len());
        for t in row {
            if t.zeta.len() > GENS {
                return Err(ComoduleJsonError::Exponents);
            }
            terms.push((DualMonomial::new(&t.zeta), t.to));
        }
        coaction.push(terms);
    }
    Ok(ComoduleWindow::new(
        spec,
        f.window,
        side,
        f.basis.iter().map(|b| b.label.clone()).collect(),
        f.basis.iter().map(|b| b.degree).collect(),
        coaction,
    )?)
}

pub fn to_json(m: &ComoduleWindow) -> Result<String, ComoduleJsonError> {
    let mut s = serde_json::to_string_pretty(&to_file(m)?)?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(s: &str) -> Result<ComoduleWindow, ComoduleJsonError> {
    let f: ComoduleFile = serde_json::from_str(s)?;
    from_file(&f)
}
