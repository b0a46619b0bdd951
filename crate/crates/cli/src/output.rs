use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Renders `value` either as pretty JSON or as one `path: value` line per
/// leaf, so both formats always carry the same values.
pub fn render<T: Serialize>(value: &T, format: Format) -> String {
    let json = serde_json::to_value(value).expect("reports serialize to JSON");
    match format {
        Format::Json => serde_json::to_string_pretty(&json).expect("valid JSON") + "\n",
        Format::Text => {
            let mut out = String::new();
            flatten("", &json, &mut out);
            out
        }
    }
}

fn flatten(path: &str, v: &Value, out: &mut String) {
    let join = |key: &str| {
        if path.is_empty() {
            key.to_string()
        } else {
            format!("{path}.{key}")
        }
    };
    match v {
        Value::Object(map) if map.is_empty() => out.push_str(&format!("{path}: {{}}\n")),
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&join(k), child, out);
            }
        }
        Value::Array(items) if !items.is_empty() => {
            for (i, child) in items.iter().enumerate() {
                flatten(&format!("{path}[{i}]"), child, out);
            }
        }
        Value::Array(_) => out.push_str(&format!("{path}: []\n")),
        Value::Null => out.push_str(&format!("{path}: n/a\n")),
        Value::String(s) => out.push_str(&format!("{path}: {s}\n")),
        other => out.push_str(&format!("{path}: {other}\n")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flattens_nested_values() {
        let v = json!({"a": 1, "b": {"c": "infinity", "d": null}, "e": [true], "f": [], "g": {}});
        assert_eq!(
            render(&v, Format::Text),
            "a: 1\nb.c: infinity\nb.d: n/a\ne[0]: true\nf: []\ng: {}\n"
        );
    }
}
