//! Named point-set datasets: a small JSON schema (with optional parametric
//! generators) plus headerless CSV, and a canonical emitter so a dataset
//! written and re-read is byte-identical.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spline::{PointSet, SplineKind};

/// A parametric source for a dataset's points: a named curve family sampled
/// at the given parameter values.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    /// Family name; see [`generator_point`] for the supported families.
    pub curve: String,
    /// Sample parameters, one per generated point.
    pub params: Vec<f64>,
}

/// A named, dimension-tagged point set, optionally carrying the generator
/// that produced it and a hint for which boundary kind it is meant for.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Dataset {
    pub name: String,
    pub dim: usize,
    #[serde(default)]
    pub mode_hint: Option<SplineKind>,
    pub points: Vec<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<GeneratorSpec>,
}

/// Evaluates one point of a named curve family.
///
/// Families: `wave` (3 sin t, t cos 3t), `ellipse` (3 cos t, 2 sin t), and
/// `trefoil` ((1 + 0.3 cos 3t) cos 2t, (1 + 0.3 cos 3t) sin 2t, 0.35 sin 3t).
pub fn generator_point(curve: &str, t: f64) -> Result<Vec<f64>> {
    match curve {
        "wave" => Ok(vec![3.0 * t.sin(), t * (3.0 * t).cos()]),
        "ellipse" => Ok(vec![3.0 * t.cos(), 2.0 * t.sin()]),
        "trefoil" => {
            let radius = 1.0 + 0.3 * (3.0 * t).cos();
            Ok(vec![
                radius * (2.0 * t).cos(),
                radius * (2.0 * t).sin(),
                0.35 * (3.0 * t).sin(),
            ])
        }
        other => Err(Error::UnknownGenerator(other.to_string())),
    }
}

/// All points of a generator spec.
pub fn generator_points(spec: &GeneratorSpec) -> Result<Vec<Vec<f64>>> {
    spec.params
        .iter()
        .map(|&t| generator_point(&spec.curve, t))
        .collect()
}

impl Dataset {
    /// Builds a generator-backed dataset, sampling the family at `params`.
    pub fn from_generator(
        name: &str,
        curve: &str,
        params: Vec<f64>,
        mode_hint: Option<SplineKind>,
    ) -> Result<Dataset> {
        let spec = GeneratorSpec {
            curve: curve.to_string(),
            params,
        };
        let points = generator_points(&spec)?;
        let dim = points.first().map_or(0, Vec::len);
        let ds = Dataset {
            name: name.to_string(),
            dim,
            mode_hint,
            points,
            generator: Some(spec),
        };
        ds.validate()?;
        Ok(ds)
    }

    /// Builds a literal dataset from explicit rows.
    pub fn from_points(
        name: &str,
        points: Vec<Vec<f64>>,
        mode_hint: Option<SplineKind>,
    ) -> Result<Dataset> {
        let dim = points.first().map_or(0, Vec::len);
        let ds = Dataset {
            name: name.to_string(),
            dim,
            mode_hint,
            points,
            generator: None,
        };
        ds.validate()?;
        Ok(ds)
    }

    /// Structural checks: a nonempty name, a supported dimension, rows of
    /// matching width with finite entries, and — when a generator is present
    /// — stored points that agree with the regenerated ones.
    pub fn validate(&self) -> Result<()> {
        if self.name.is_empty() {
            return Err(Error::DatasetFormat("dataset name is empty".into()));
        }
        if self.dim != 2 && self.dim != 3 {
            return Err(Error::DatasetFormat(format!(
                "dimension must be 2 or 3, got {}",
                self.dim
            )));
        }
        for (i, row) in self.points.iter().enumerate() {
            if row.len() != self.dim {
                return Err(Error::DatasetFormat(format!(
                    "point {i} has {} coordinates, expected {}",
                    row.len(),
                    self.dim
                )));
            }
            if let Some(j) = row.iter().position(|c| !c.is_finite()) {
                return Err(Error::DatasetFormat(format!(
                    "point {i} coordinate {j} is not finite"
                )));
            }
        }
        if let Some(spec) = &self.generator {
            let regenerated = generator_points(spec)?;
            if regenerated.len() != self.points.len() {
                return Err(Error::DatasetFormat(format!(
                    "generator yields {} points but {} are stored",
                    regenerated.len(),
                    self.points.len()
                )));
            }
            let scale = self
                .points
                .iter()
                .flatten()
                .fold(1.0f64, |m, c| m.max(c.abs()));
            for (i, (a, b)) in regenerated.iter().zip(&self.points).enumerate() {
                let drift = a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| (x - y).abs())
                    .fold(0.0f64, f64::max);
                if drift > 1e-9 * scale {
                    return Err(Error::DatasetFormat(format!(
                        "stored point {i} disagrees with its generator by {drift:.3e}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The validated point set (consecutive-distinct, uniform width).
    pub fn to_point_set(&self) -> Result<PointSet> {
        self.validate()?;
        PointSet::from_rows(&self.points)
    }

    /// Canonical JSON form: pretty-printed, trailing newline. Loading and
    /// re-emitting a canonical file reproduces it byte for byte.
    pub fn canonical_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    /// Writes the canonical JSON form.
    pub fn save(&self, path: &Path) -> Result<()> {
        self.validate()?;
        fs::write(path, self.canonical_json()?)?;
        Ok(())
    }

    /// Loads a dataset from `.json` (full schema) or `.csv` (headerless
    /// coordinate rows; the name is the file stem, the mode hint empty).
    pub fn load(path: &Path) -> Result<Dataset> {
        let ext = path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase);
        let text = fs::read_to_string(path)?;
        let ds = match ext.as_deref() {
            Some("json") => serde_json::from_str::<Dataset>(&text)?,
            Some("csv") => {
                let name = path
                    .file_stem()
                    .and_then(|s| s.to_str())
                    .unwrap_or("dataset");
                parse_csv(name, &text)?
            }
            other => {
                return Err(Error::DatasetFormat(format!(
                    "unsupported dataset extension {:?} (expected .json or .csv)",
                    other.unwrap_or("")
                )))
            }
        };
        ds.validate()?;
        Ok(ds)
    }
}

fn parse_csv(name: &str, text: &str) -> Result<Dataset> {
    let mut points = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split(',')
            .map(|cell| {
                cell.trim().parse::<f64>().map_err(|_| {
                    Error::DatasetFormat(format!(
                        "line {}: {:?} is not a number",
                        lineno + 1,
                        cell.trim()
                    ))
                })
            })
            .collect::<Result<Vec<f64>>>()?;
        if row.len() != 2 && row.len() != 3 {
            return Err(Error::DatasetFormat(format!(
                "line {}: expected 2 or 3 coordinates, got {}",
                lineno + 1,
                row.len()
            )));
        }
        points.push(row);
    }
    if points.is_empty() {
        return Err(Error::DatasetFormat("no coordinate rows".into()));
    }
    Dataset::from_points(name, points, None)
}
