//! JSON file formats. Rationals are always `"p/q"` strings.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use qrat_core::cdga::{CdgaPresentation, Generator};
use qrat_core::malcev::MalcevElement;
use qrat_core::rational::format_rational;
use qrat_core::simplicial::{FiniteSimplicialSet, Simplex};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplexJson {
    pub dim: usize,
    pub id: usize,
    pub faces: Vec<usize>,
    pub degeneracies: Vec<usize>,
    pub degenerate: bool,
}

/// `{"dimension_bound": n, "simplices": [...]}` with every simplex up to the
/// bound listed, degenerate ones included.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimplicialJson {
    pub dimension_bound: usize,
    pub simplices: Vec<SimplexJson>,
}

impl SimplicialJson {
    pub fn from_set(x: &FiniteSimplicialSet) -> Self {
        let simplices = x
            .levels()
            .iter()
            .enumerate()
            .flat_map(|(dim, level)| {
                level.iter().enumerate().map(move |(id, s)| SimplexJson {
                    dim,
                    id,
                    faces: s.faces.clone(),
                    degeneracies: s.degeneracies.clone(),
                    degenerate: s.degenerate,
                })
            })
            .collect();
        SimplicialJson {
            dimension_bound: x.dimension_bound(),
            simplices,
        }
    }

    pub fn to_set(&self) -> Result<FiniteSimplicialSet, CliError> {
        let mut levels: Vec<BTreeMap<usize, Simplex>> = vec![BTreeMap::new(); self.dimension_bound + 1];
        for s in &self.simplices {
            let level = levels.get_mut(s.dim).ok_or_else(|| {
                CliError::Format(format!("simplex {} has dimension {} above the bound", s.id, s.dim))
            })?;
            let simplex = Simplex {
                faces: s.faces.clone(),
                degeneracies: s.degeneracies.clone(),
                degenerate: s.degenerate,
            };
            if level.insert(s.id, simplex).is_some() {
                return Err(CliError::Format(format!("simplex {} of dimension {} listed twice", s.id, s.dim)));
            }
        }
        let mut out = Vec::with_capacity(levels.len());
        for (dim, level) in levels.into_iter().enumerate() {
            if let Some((_, (id, _))) = level.iter().enumerate().find(|(pos, (id, _))| pos != *id) {
                return Err(CliError::Format(format!(
                    "ids in dimension {dim} must be 0, 1, 2, …; found {id}"
                )));
            }
            out.push(level.into_values().collect());
        }
        Ok(FiniteSimplicialSet::from_levels(self.dimension_bound, out)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorJson {
    pub name: String,
    pub degree: usize,
}

/// `{"generators": [{"name", "degree"}], "differential": {"name": "expr"}}`;
/// generators missing from `differential` are closed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CdgaJson {
    pub generators: Vec<GeneratorJson>,
    #[serde(default)]
    pub differential: BTreeMap<String, String>,
}

impl CdgaJson {
    pub fn from_presentation(a: &CdgaPresentation) -> Self {
        let generators = a
            .generators()
            .iter()
            .map(|g| GeneratorJson {
                name: g.name.clone(),
                degree: g.degree,
            })
            .collect();
        let differential = a
            .generators()
            .iter()
            .zip(a.differential())
            .filter(|(_, p)| !p.is_zero())
            .map(|(g, p)| (g.name.clone(), a.render(p)))
            .collect();
        CdgaJson {
            generators,
            differential,
        }
    }

    pub fn to_presentation(&self) -> Result<CdgaPresentation, CliError> {
        let gens = self
            .generators
            .iter()
            .map(|g| Generator::new(g.name.clone(), g.degree))
            .collect();
        let diffs: Vec<(&str, &str)> = self
            .differential
            .iter()
            .map(|(k, v)| (k.as_str(), v.as_str()))
            .collect();
        Ok(CdgaPresentation::new(gens, &diffs)?)
    }
}

/// `{hall_word: "p/q"}` over the nonzero coordinates.
pub fn coordinates_json(e: &MalcevElement) -> BTreeMap<String, String> {
    e.value()
        .coeffs()
        .iter()
        .map(|(w, c)| (w.to_string(), format_rational(c)))
        .collect()
}
