use serde_json::Value;

use crate::error::IoError;
use crate::model::ScenarioConfig;

/// A `dotted.path=value` assignment on top of a config.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Override {
    pub path: String,
    pub value: String,
}

impl std::str::FromStr for Override {
    type Err = IoError;

    fn from_str(s: &str) -> Result<Self, IoError> {
        let (path, value) = s
            .split_once('=')
            .ok_or_else(|| IoError::BadOverride(s.to_string(), "expected key=value".into()))?;
        let path = path.trim();
        if path.is_empty() {
            return Err(IoError::BadOverride(s.to_string(), "empty key".into()));
        }
        Ok(Override {
            path: path.to_string(),
            value: value.trim().to_string(),
        })
    }
}

impl std::fmt::Display for Override {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}={}", self.path, self.value)
    }
}

/// Apply overrides in order. The value is read as JSON when it parses
/// (numbers, booleans, arrays) and as a bare string otherwise. Only existing
/// fields can be set; array elements are addressed by index
/// (`geometry.device_position_m.0`).
pub fn apply_overrides(config: &ScenarioConfig, overrides: &[Override]) -> Result<ScenarioConfig, IoError> {
    let mut root = serde_json::to_value(config)?;
    for o in overrides {
        let bad = |why: &str| IoError::BadOverride(o.to_string(), why.to_string());
        let mut node = &mut root;
        for part in o.path.split('.') {
            node = match node {
                Value::Object(map) => map.get_mut(part).ok_or_else(|| bad(&format!("no field `{part}`")))?,
                Value::Array(items) => {
                    let idx: usize = part.parse().map_err(|_| bad(&format!("`{part}` is not an index")))?;
                    items.get_mut(idx).ok_or_else(|| bad(&format!("index {idx} out of range")))?
                }
                _ => return Err(bad(&format!("cannot descend into `{part}`"))),
            };
        }
        *node = serde_json::from_str(&o.value).unwrap_or_else(|_| Value::String(o.value.clone()));
    }
    serde_json::from_value(root).map_err(|e| IoError::BadOverride(
        overrides.iter().map(|o| o.to_string()).collect::<Vec<_>>().join(", "),
        e.to_string(),
    ))
}
