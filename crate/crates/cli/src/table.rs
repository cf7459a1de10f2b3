//! Row-oriented output shared by every subcommand.
//!
//! CSV gets a header row and numbers printed with 17 significant digits. JSON
//! is an array of objects with the same fields in the same order; a column
//! named `a.b` becomes field `b` of a nested object `a`.

use serde_json::{Map, Number, Value};

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Signed(i64),
    Bool(bool),
    Text(String),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Signed(v)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

/// `{:.16e}` gives 17 significant digits.
pub fn format_num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        String::new()
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => format_num(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Signed(v) => v.to_string(),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(s) if s.contains([',', '"', '\n']) => {
                format!("\"{}\"", s.replace('"', "\"\""))
            }
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Num(v) => Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Int(v) => Value::from(*v),
            Cell::Signed(v) => Value::from(*v),
            Cell::Bool(v) => Value::Bool(*v),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Empty => Value::Null,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.columns.len(),
            "row width must match the header"
        );
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (name, cell) in self.columns.iter().zip(row) {
                    match name.split_once('.') {
                        Some((outer, inner)) => {
                            let nested = obj
                                .entry(outer.to_string())
                                .or_insert_with(|| Value::Object(Map::new()));
                            if let Value::Object(m) = nested {
                                m.insert(inner.to_string(), cell.json());
                            }
                        }
                        None => {
                            obj.insert(name.to_string(), cell.json());
                        }
                    }
                }
                Value::Object(obj)
            })
            .collect();
        let mut s =
            serde_json::to_string_pretty(&Value::Array(rows)).expect("json values serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(format_num(0.1), "1.0000000000000001e-1");
        assert_eq!(format_num(-2.0), "-2.0000000000000000e0");
        assert_eq!(format_num(f64::NAN), "");
    }

    #[test]
    fn csv_and_json_mirror() {
        let mut t = Table::new(&["a", "b.c", "b.d", "e"]);
        t.push(vec![1.5.into(), 3u64.into(), true.into(), "x,y".into()]);
        assert_eq!(
            t.to_csv(),
            "a,b.c,b.d,e\n1.5000000000000000e0,3,true,\"x,y\"\n"
        );
        let v: Value = serde_json::from_str(&t.to_json()).unwrap();
        assert_eq!(v[0]["a"], 1.5);
        assert_eq!(v[0]["b"]["c"], 3);
        assert_eq!(v[0]["b"]["d"], true);
        assert_eq!(v[0]["e"], "x,y");
    }
}
