use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{survey_ann, survey_area, survey_cl, with_threads, Function, GrowthTable, Kind, TableFormat, DEFAULT_SEED};
use crate::area::AreaBudget;
use crate::error::{Error, Result};
use crate::registry::lookup;

/// A survey batch: every run writes one table under `out_dir`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentManifest {
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "default_out")]
    pub out_dir: PathBuf,
    #[serde(default = "default_format")]
    pub format: String,
    #[serde(rename = "run", default)]
    pub runs: Vec<RunSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunSpec {
    pub group: String,
    /// `area`, `cl` or `ann`.
    pub function: String,
    pub n_max: usize,
    #[serde(default = "default_radius")]
    pub radius: usize,
    #[serde(default = "default_nodes")]
    pub max_nodes: usize,
    #[serde(default = "default_len")]
    pub max_len: usize,
}

fn default_seed() -> u64 {
    DEFAULT_SEED
}
fn default_out() -> PathBuf {
    PathBuf::from("tables")
}
fn default_format() -> String {
    "csv".into()
}
fn default_radius() -> usize {
    12
}
fn default_nodes() -> usize {
    100_000
}
fn default_len() -> usize {
    16
}

impl RunSpec {
    pub fn budget(&self) -> AreaBudget {
        AreaBudget::new(self.max_nodes, 64, self.max_len)
    }

    pub fn run(&self, seed: u64) -> Result<GrowthTable> {
        let g = lookup(&self.group)?;
        let func = Function::parse(&self.function)
            .ok_or_else(|| Error::Manifest(format!("unknown function `{}`", self.function)))?;
        let mut t = match func {
            Function::Area => survey_area(g.as_ref(), self.n_max, self.budget()),
            Function::Cl => survey_cl(g.as_ref(), self.n_max, self.radius)?,
            Function::Ann => survey_ann(g.as_ref(), self.n_max, self.radius, self.budget())?,
        };
        t.seed = seed;
        Ok(t)
    }

    pub fn file_name(&self, format: TableFormat) -> String {
        let ext = match format {
            TableFormat::Csv => "csv",
            TableFormat::Tsv => "tsv",
        };
        format!("{}_{}.{ext}", self.file_stem(), self.function)
    }

    fn file_stem(&self) -> String {
        self.group.replace([':', '/'], "-")
    }
}

impl ExperimentManifest {
    pub fn from_toml(text: &str) -> Result<Self> {
        let m: Self = toml::from_str(text).map_err(|e| Error::Manifest(e.to_string()))?;
        m.table_format()?;
        Ok(m)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_toml(&fs::read_to_string(path)?)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("manifest serialises")
    }

    pub fn table_format(&self) -> Result<TableFormat> {
        match self.format.as_str() {
            "csv" => Ok(TableFormat::Csv),
            "tsv" => Ok(TableFormat::Tsv),
            f => Err(Error::Manifest(format!("unknown format `{f}`"))),
        }
    }

    /// Runs every table on `threads` workers and writes them, plus a copy of
    /// the manifest, under `out` (or `out_dir` when `None`).
    pub fn execute(&self, out: Option<&Path>, threads: usize) -> Result<Vec<PathBuf>> {
        let dir = out.unwrap_or(&self.out_dir);
        fs::create_dir_all(dir)?;
        let format = self.table_format()?;
        let mut written = Vec::new();
        for spec in &self.runs {
            let table = with_threads(threads, || spec.run(self.seed))?;
            let path = dir.join(spec.file_name(format));
            write_atomic(&path, &table.to_delimited(format))?;
            written.push(path);
            for kind in [Kind::Exact, Kind::Upper, Kind::Lower] {
                let data = table.plot_data(kind);
                if !data.is_empty() {
                    let plot = dir.join(format!("{}_{}_{kind}.dat", spec.file_stem(), spec.function));
                    write_atomic(&plot, &data)?;
                    written.push(plot);
                }
            }
        }
        write_atomic(&dir.join("manifest.toml"), &self.to_toml())?;
        Ok(written)
    }
}

/// Writes through a temporary file in the same directory, then renames.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let tmp = path.with_extension("partial");
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"
seed = 7
format = "csv"

[[run]]
group = "BS12"
function = "area"
n_max = 5

[[run]]
group = "G1"
function = "cl"
n_max = 5

[[run]]
group = "BS12"
function = "ann"
n_max = 4
"#;

    #[test]
    fn parse_and_roundtrip() {
        let m = ExperimentManifest::from_toml(SMALL).unwrap();
        assert_eq!(m.seed, 7);
        assert_eq!(m.runs.len(), 3);
        assert_eq!(m.runs[0].radius, 12);
        assert_eq!(ExperimentManifest::from_toml(&m.to_toml()).unwrap(), m);
        assert!(ExperimentManifest::from_toml("format = \"xml\"").is_err());
        assert!(ExperimentManifest::from_toml("bogus = 1").is_err());
    }

    #[test]
    fn replay_is_byte_identical_across_thread_counts() {
        let m = ExperimentManifest::from_toml(SMALL).unwrap();
        let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
        let fa = m.execute(Some(a.path()), 1).unwrap();
        let fb = m.execute(Some(b.path()), 3).unwrap();
        let tables = fa.iter().filter(|p| p.extension().is_some_and(|e| e == "csv")).count();
        assert_eq!((tables, fa.len()), (3, 6));
        for (x, y) in fa.iter().zip(&fb) {
            assert_eq!(fs::read(x).unwrap(), fs::read(y).unwrap());
        }
        let t = GrowthTable::from_delimited(&fs::read_to_string(&fa[0]).unwrap()).unwrap();
        assert_eq!(t.seed, 7);
        assert!(a.path().join("manifest.toml").exists());
    }
}
