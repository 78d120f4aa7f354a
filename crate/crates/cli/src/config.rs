//! Resource limits from defaults, a key=value file, the environment and flags.

use std::path::Path;

use orbit_atlas::Limits;

use crate::Failure;

pub const BUDGET_ENV: &str = "ORBIT_ATLAS_BUDGET";

/// Applies `key=value` lines on top of `limits`. Blank lines and `#` comments are skipped.
pub fn apply_config_text(limits: &mut Limits, text: &str) -> Result<(), Failure> {
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("config line {}: expected key=value", n + 1)))?;
        let (key, value) = (key.trim(), value.trim());
        let bad = |_| {
            Failure::Usage(format!(
                "config line {}: bad value for {key}: '{value}'",
                n + 1
            ))
        };
        match key {
            "enum_budget" => limits.enum_budget = value.parse().map_err(bad)?,
            "tree_t_max" => limits.tree_t_max = value.parse().map_err(bad)?,
            other => {
                return Err(Failure::Usage(format!(
                    "config line {}: unknown key '{other}'",
                    n + 1
                )))
            }
        }
    }
    Ok(())
}

/// Flag > environment > config file > default.
pub fn resolve(
    config: Option<&Path>,
    env_budget: Option<&str>,
    budget: Option<u64>,
    tree_t_max: Option<usize>,
) -> Result<Limits, Failure> {
    let mut limits = Limits::default();
    if let Some(path) = config {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Unreadable(format!("{}: {e}", path.display())))?;
        apply_config_text(&mut limits, &text)?;
    }
    if let Some(value) = env_budget {
        limits.enum_budget = value
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{BUDGET_ENV}: not a number: '{value}'")))?;
    }
    if let Some(b) = budget {
        limits.enum_budget = b;
    }
    if let Some(m) = tree_t_max {
        limits.tree_t_max = m;
    }
    Ok(limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let mut limits = Limits::default();
        apply_config_text(&mut limits, "# bounds\nenum_budget = 10\ntree_t_max=5\n").unwrap();
        assert_eq!((limits.enum_budget, limits.tree_t_max), (10, 5));

        let limits = resolve(None, Some("20"), None, None).unwrap();
        assert_eq!(limits.enum_budget, 20);
        let limits = resolve(None, Some("20"), Some(30), Some(3)).unwrap();
        assert_eq!((limits.enum_budget, limits.tree_t_max), (30, 3));
    }

    #[test]
    fn rejects_bad_lines() {
        let mut limits = Limits::default();
        assert!(apply_config_text(&mut limits, "budget=3").is_err());
        assert!(apply_config_text(&mut limits, "enum_budget").is_err());
        assert!(apply_config_text(&mut limits, "tree_t_max=x").is_err());
        assert!(resolve(None, Some("lots"), None, None).is_err());
    }
}
