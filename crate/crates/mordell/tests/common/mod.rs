//! Schema validation for CLI output: the subset of JSON Schema the
//! schemas/ directory actually uses (type, properties, required, items,
//! enum, minItems, maxItems).

use serde_json::Value;

pub fn validate(value: &Value, schema: &Value, path: &str) -> Result<(), String> {
    if let Some(allowed) = schema.get("enum") {
        let allowed = allowed.as_array().expect("enum is an array");
        if !allowed.iter().any(|a| a == value) {
            return Err(format!("{path}: {value} not in enum {allowed:?}"));
        }
        return Ok(());
    }
    if let Some(ty) = schema.get("type") {
        let names: Vec<&str> = match ty {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(|v| v.as_str()).collect(),
            _ => panic!("schema type must be a string or array"),
        };
        if !names.iter().any(|n| type_matches(value, n)) {
            return Err(format!("{path}: expected {names:?}, got {value}"));
        }
    }
    if let Some(props) = schema.get("properties") {
        let obj = match value.as_object() {
            Some(o) => o,
            None => return Ok(()), // type check above already reported
        };
        if let Some(required) = schema.get("required").and_then(|r| r.as_array()) {
            for key in required {
                let key = key.as_str().expect("required key is a string");
                if !obj.contains_key(key) {
                    return Err(format!("{path}: missing required key '{key}'"));
                }
            }
        }
        for (key, sub) in props.as_object().expect("properties is an object") {
            if let Some(v) = obj.get(key) {
                validate(v, sub, &format!("{path}.{key}"))?;
            }
        }
    }
    if let Some(arr) = value.as_array() {
        if let Some(min) = schema.get("minItems").and_then(|v| v.as_u64()) {
            if (arr.len() as u64) < min {
                return Err(format!("{path}: fewer than {min} items"));
            }
        }
        if let Some(max) = schema.get("maxItems").and_then(|v| v.as_u64()) {
            if (arr.len() as u64) > max {
                return Err(format!("{path}: more than {max} items"));
            }
        }
        if let Some(items) = schema.get("items") {
            for (i, item) in arr.iter().enumerate() {
                validate(item, items, &format!("{path}[{i}]"))?;
            }
        }
    }
    Ok(())
}

fn type_matches(value: &Value, name: &str) -> bool {
    match name {
        "object" => value.is_object(),
        "array" => value.is_array(),
        "string" => value.is_string(),
        "number" => value.is_number(),
        "integer" => value.is_i64() || value.is_u64(),
        "boolean" => value.is_boolean(),
        "null" => value.is_null(),
        other => panic!("unknown schema type '{other}'"),
    }
}

pub fn load_schema(name: &str) -> Value {
    let path = format!("{}/schemas/{name}.json", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    serde_json::from_str(&text).unwrap_or_else(|e| panic!("{path}: {e}"))
}

/// Run the CLI binary; returns (stdout, stderr, exit code).
pub fn run_cli(args: &[&str]) -> (String, String, i32) {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_mordell"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("stdout is utf8"),
        String::from_utf8(out.stderr).expect("stderr is utf8"),
        out.status.code().unwrap_or(-1),
    )
}

/// Run, assert exit 0, parse stdout as JSON and validate against the schema.
pub fn run_json(args: &[&str], schema: &str) -> Value {
    let (stdout, stderr, code) = run_cli(args);
    assert_eq!(code, 0, "{args:?} exited {code}: {stderr}");
    let value: Value = serde_json::from_str(&stdout)
        .unwrap_or_else(|e| panic!("{args:?} stdout is not JSON ({e}): {stdout}"));
    validate(&value, &load_schema(schema), "$")
        .unwrap_or_else(|e| panic!("{args:?} violates schemas/{schema}.json: {e}"));
    value
}
