use filtmult::numeric::Scalar;
use serde_json::Value;

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "table" => Ok(Format::Table),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

/// Renderable command output: a flat row list for table/csv plus a
/// structured value for json. Both are assembled in a fixed order.
pub struct Report {
    pub rows: Vec<(String, String)>,
    pub json: Value,
}

impl Report {
    pub fn new() -> Report {
        Report {
            rows: vec![],
            json: Value::Null,
        }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.rows.push((key.into(), value.into()));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
            Format::Table => {
                let width = self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                let mut out = String::new();
                for (k, v) in &self.rows {
                    if k.is_empty() {
                        out.push_str(v);
                        out.push('\n');
                    } else {
                        out.push_str(&format!("{k:<width$}  {v}\n"));
                    }
                }
                out
            }
            Format::Csv => {
                let mut out = String::from("key,value\n");
                for (k, v) in &self.rows {
                    if k.is_empty() {
                        continue;
                    }
                    out.push_str(&format!("{},{}\n", csv_escape(k), csv_escape(v)));
                }
                out
            }
        }
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Exact scalars render exactly; floats carry a `~` marker and the digit
/// budget.
pub fn scalar_str(s: &Scalar, digits: usize) -> String {
    match s {
        Scalar::Float { value, .. } => format!("~{value:.digits$}"),
        exact => format!("{exact}"),
    }
}

pub fn scalar_json(s: &Scalar, digits: usize) -> Value {
    match s {
        Scalar::Float { value, tol } => serde_json::json!({
            "float": format!("{value:.digits$}"),
            "tol": format!("{tol:.3e}"),
        }),
        exact => Value::String(format!("{exact}")),
    }
}
