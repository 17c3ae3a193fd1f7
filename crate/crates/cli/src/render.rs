//! Human-readable views of the JSON reports.

use serde_json::Value;

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_array() && !i.is_object()) => {
            let parts: Vec<String> = items.iter().filter_map(scalar).collect();
            Some(format!("[{}]", parts.join(", ")))
        }
        _ => None,
    }
}

fn write(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (key, value) in map {
                match scalar(value) {
                    Some(s) => out.push_str(&format!("{pad}{key}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{key}:\n"));
                        write(value, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}- #{}\n", i + 1));
                        write(item, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

/// Indented `key: value` outline of a JSON document.
pub fn outline(v: &Value) -> String {
    let mut out = String::new();
    write(v, 0, &mut out);
    out
}

/// One line per node of a decomposition tree report.
pub fn tree_outline(tree: &Value) -> String {
    fn walk(node: &Value, depth: usize, label: &str, out: &mut String) {
        let pad = "  ".repeat(depth);
        let gens = node["generators"]
            .as_array()
            .map(|g| {
                g.iter()
                    .filter_map(Value::as_str)
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .unwrap_or_default();
        let verdict = node["verdict"].as_str().unwrap_or("?");
        let detail = match verdict {
            "decomposed" => format!(
                "split at {} ({}, {})",
                node["y"].as_str().unwrap_or("?"),
                node["degeneracy"].as_str().unwrap_or("?"),
                node["order"].as_str().unwrap_or("?")
            ),
            "failed" => {
                let reasons: Vec<&str> = node["reasons"]
                    .as_array()
                    .map(|r| r.iter().filter_map(Value::as_str).collect())
                    .unwrap_or_default();
                format!("failed: {}", reasons.join("; "))
            }
            other => other.to_string(),
        };
        out.push_str(&format!("{pad}{label}<{gens}>  {detail}\n"));
        if verdict == "decomposed" {
            walk(&node["cBranch"], depth + 1, "C = ", out);
            walk(&node["nBranch"], depth + 1, "N = ", out);
        }
    }
    let mut out = String::new();
    walk(tree, 0, "", &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn outlines() {
        let v = json!({"a": 1, "b": [1, 2], "c": {"d": null}});
        assert_eq!(outline(&v), "a: 1\nb: [1, 2]\nc:\n  d: -\n");
    }
}
