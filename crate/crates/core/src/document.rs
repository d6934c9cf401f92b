//! Deterministic structured text documents: nested key/value blocks with
//! arrays, written in insertion order so identical inputs render to
//! byte-identical reports.

use std::fmt::Display;

#[derive(Debug, Default)]
pub struct Doc {
    lines: Vec<String>,
    indent: usize,
}

impl Doc {
    pub fn new() -> Self {
        Doc::default()
    }

    fn pad(&self) -> String {
        "  ".repeat(self.indent)
    }

    pub fn kv(&mut self, key: &str, value: impl Display) {
        self.lines
            .push(format!("{}{} = {}", self.pad(), key, value));
    }

    pub fn kv_str(&mut self, key: &str, value: impl Display) {
        self.lines
            .push(format!("{}{} = \"{}\"", self.pad(), key, value));
    }

    pub fn list<T: Display>(&mut self, key: &str, items: impl IntoIterator<Item = T>) {
        let rendered: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
        self.lines
            .push(format!("{}{} = [{}]", self.pad(), key, rendered.join(", ")));
    }

    pub fn begin(&mut self, key: &str) {
        self.lines.push(format!("{}{} {{", self.pad(), key));
        self.indent += 1;
    }

    pub fn end(&mut self) {
        self.indent = self.indent.saturating_sub(1);
        self.lines.push(format!("{}}}", self.pad()));
    }

    pub fn line(&mut self, text: impl Display) {
        self.lines.push(format!("{}{}", self.pad(), text));
    }

    pub fn render(&self) -> String {
        let mut out = self.lines.join("\n");
        out.push('\n');
        out
    }
}

/// Render an index-vector key like `0.1.0` for compact table listings.
pub fn key_str(key: &[usize]) -> String {
    key.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(".")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nesting_and_rendering() {
        let mut d = Doc::new();
        d.begin("report");
        d.kv("order", 4);
        d.list("elements", [0, 1, 2]);
        d.begin("inner");
        d.kv_str("name", "x");
        d.end();
        d.end();
        let s = d.render();
        assert_eq!(
            s,
            "report {\n  order = 4\n  elements = [0, 1, 2]\n  inner {\n    name = \"x\"\n  }\n}\n"
        );
    }
}
