use std::path::{Path, PathBuf};

use freeprod::{FactorSpec, GroupSpec, SubgroupSpec};
use serde::Deserialize;

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub level: Option<String>,
    pub max_len: Option<usize>,
    pub emit_dot: Option<PathBuf>,
    pub out: Option<PathBuf>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub free_rank: usize,
    pub factors: Vec<Vec<u64>>,
    pub exponents: SubgroupSpec,
    #[serde(default)]
    pub options: Options,
}

impl Config {
    pub fn load(path: &Path) -> Result<Config, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }

    /// The group and subgroup, with every invariant checked.
    pub fn build(&self) -> Result<(GroupSpec, SubgroupSpec), String> {
        let factors = self
            .factors
            .iter()
            .map(|f| FactorSpec::new(f.clone()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let g = GroupSpec::new(self.free_rank, factors);
        self.exponents.validate(&g).map_err(|e| e.to_string())?;
        Ok((g, self.exponents.clone()))
    }
}
