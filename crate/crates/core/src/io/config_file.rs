use std::fs;
use std::path::Path;

use crate::error::IoError;
use crate::model::{ScenarioConfig, CONFIG_SCHEMA};

/// Parse a JSON config, rejecting unknown schema versions before anything
/// else is looked at.
pub fn parse_config(text: &str, origin: &Path) -> Result<ScenarioConfig, IoError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|source| IoError::Parse {
        path: origin.to_path_buf(),
        source,
    })?;
    let found = value.get("schema").and_then(|s| s.as_str()).unwrap_or("");
    if found != CONFIG_SCHEMA {
        return Err(IoError::Schema {
            found: found.to_string(),
            expected: CONFIG_SCHEMA,
        });
    }
    serde_json::from_value(value).map_err(|source| IoError::Parse {
        path: origin.to_path_buf(),
        source,
    })
}

pub fn load_config(path: &Path) -> Result<ScenarioConfig, IoError> {
    let text = fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text, path)
}

pub fn save_config(config: &ScenarioConfig, path: &Path) -> Result<(), IoError> {
    let text = serde_json::to_string_pretty(config)?;
    fs::write(path, text + "\n").map_err(|source| IoError::File {
        path: path.to_path_buf(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_suffixed_field_names() {
        let text = serde_json::to_string(&ScenarioConfig::default()).unwrap();
        for key in ["tti_seconds", "p_max_watts", "ap_position_m", "initial_energy_joules", "l_min_bits"] {
            assert!(text.contains(key), "{key} missing");
        }
    }

    #[test]
    fn roundtrip_through_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        let mut cfg = ScenarioConfig::default();
        cfg.irs.element_count = 200;
        cfg.master_seed = u64::MAX;
        save_config(&cfg, &path).unwrap();
        assert_eq!(load_config(&path).unwrap(), cfg);
    }

    #[test]
    fn schema_required() {
        let mut v = serde_json::to_value(ScenarioConfig::default()).unwrap();
        v["schema"] = "other/v0".into();
        let err = parse_config(&v.to_string(), Path::new("x.json")).unwrap_err();
        assert!(matches!(err, IoError::Schema { .. }));
        v.as_object_mut().unwrap().remove("schema");
        assert!(matches!(
            parse_config(&v.to_string(), Path::new("x.json")).unwrap_err(),
            IoError::Schema { .. }
        ));
    }

    #[test]
    fn missing_file_is_io_error() {
        let err = load_config(Path::new("/nonexistent/c.json")).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }
}
