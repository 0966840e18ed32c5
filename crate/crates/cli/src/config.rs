use std::path::{Path, PathBuf};
use std::{env, fs};

use delannoy_jacobi::identities::SuiteConfig;

pub const FILE_NAME: &str = "delannoy-jacobi.conf";
pub const PATH_VAR: &str = "DJ_CONFIG";

/// Settings read from the optional config file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FileConfig {
    pub max_n: Option<usize>,
    pub total_steps: Option<usize>,
    pub pair_elements: Option<usize>,
    pub pair_oracle_max: Option<usize>,
    pub parallel: Option<bool>,
}

impl FileConfig {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut config = FileConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| format!("line {}: expected key = value", lineno + 1))?;
            let (key, value) = (key.trim(), value.trim());
            let number = || {
                value
                    .parse::<usize>()
                    .map_err(|_| format!("line {}: `{value}` is not a natural number", lineno + 1))
            };
            match key {
                "max_n" => config.max_n = Some(number()?),
                "total_steps" => config.total_steps = Some(number()?),
                "pair_elements" => config.pair_elements = Some(number()?),
                "pair_oracle_max" => config.pair_oracle_max = Some(number()?),
                "parallel" => {
                    config.parallel = Some(match value {
                        "true" | "yes" | "1" => true,
                        "false" | "no" | "0" => false,
                        _ => {
                            return Err(format!("line {}: `{value}` is not a boolean", lineno + 1))
                        }
                    })
                }
                _ => return Err(format!("line {}: unknown key `{key}`", lineno + 1)),
            }
        }
        Ok(config)
    }

    /// `$DJ_CONFIG` if set, else `delannoy-jacobi.conf` in the working
    /// directory when present.
    pub fn locate() -> Option<PathBuf> {
        match env::var_os(PATH_VAR) {
            Some(path) => Some(PathBuf::from(path)),
            None => {
                let local = Path::new(FILE_NAME);
                local.is_file().then(|| local.to_path_buf())
            }
        }
    }

    pub fn load() -> Result<Self, String> {
        match Self::locate() {
            None => Ok(Self::default()),
            Some(path) => {
                let text = fs::read_to_string(&path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
                Self::parse(&text).map_err(|e| format!("{}: {e}", path.display()))
            }
        }
    }

    pub fn suite_config(&self) -> SuiteConfig {
        let mut config = SuiteConfig {
            max_n: self.max_n,
            ..SuiteConfig::default()
        };
        if let Some(v) = self.total_steps {
            config.caps.total_steps = v;
        }
        if let Some(v) = self.pair_elements {
            config.caps.pair_elements = v;
        }
        if let Some(v) = self.pair_oracle_max {
            config.pair_oracle_max = v;
        }
        if let Some(v) = self.parallel {
            config.parallel = v;
        }
        config
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_keys_and_comments() {
        let config =
            FileConfig::parse("max_n = 3\n# comment\nparallel=false\ntotal_steps=10 # trailing\n")
                .unwrap();
        assert_eq!(config.max_n, Some(3));
        assert_eq!(config.parallel, Some(false));
        assert_eq!(config.total_steps, Some(10));
        let suite = config.suite_config();
        assert_eq!(suite.caps.total_steps, 10);
        assert!(!suite.parallel);
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(FileConfig::parse("colour = red").is_err());
        assert!(FileConfig::parse("max_n = -1").is_err());
        assert!(FileConfig::parse("max_n").is_err());
    }
}
