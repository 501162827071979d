//! Deterministic CSV emission.
//!
//! Reals are written with 15 significant digits in exponent form, which
//! never depends on locale. Lines end in `\n`; the header row comes first,
//! after any `#` provenance comments.

use std::io::Write;
use std::path::Path;

use crate::CliError;

/// `{:.14e}`: one digit before the point and fourteen after.
pub fn real(x: f64) -> String {
    format!("{x:.14e}")
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub comments: Vec<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|s| s.to_string()).collect(), ..Self::default() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.comments {
            s.push_str("# ");
            s.push_str(c);
            s.push('\n');
        }
        s.push_str(&self.header.join(","));
        s.push('\n');
        for row in &self.rows {
            s.push_str(&row.join(","));
            s.push('\n');
        }
        s
    }

    /// Writes to `out`, or to standard output when `out` is `None`.
    pub fn emit(&self, out: Option<&Path>) -> Result<(), CliError> {
        let text = self.render();
        match out {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| CliError::param(format!("cannot write {}: {e}", path.display()))),
            None => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                lock.write_all(text.as_bytes())?;
                lock.flush()?;
                Ok(())
            }
        }
    }
}
