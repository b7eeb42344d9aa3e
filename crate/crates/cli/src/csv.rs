//! Minimal CSV writer with a fixed number format.
//!
//! Floats are written in scientific notation with 17 significant digits,
//! which round-trips every `f64` exactly. Rows end in `\n`; there is no
//! quoting since every field is numeric.

use std::fmt::Write;

/// `x` with 17 significant digits, e.g. `-2.0000000000000000e0`.
pub fn float(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone)]
pub struct Table {
    buf: String,
    columns: usize,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        let mut buf = header.join(",");
        buf.push('\n');
        Self {
            buf,
            columns: header.len(),
        }
    }

    pub fn row<I>(&mut self, fields: I)
    where
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        let mut n = 0;
        for field in fields {
            if n > 0 {
                self.buf.push(',');
            }
            self.buf.push_str(field.as_ref());
            n += 1;
        }
        debug_assert_eq!(n, self.columns, "row width must match header");
        self.buf.push('\n');
    }

    pub fn finish(self) -> String {
        self.buf
    }
}

/// One `key=value` summary line.
pub fn summary(key: &str, value: f64) -> String {
    let mut s = String::new();
    write!(s, "{key}={}", float(value)).expect("writing to a String");
    s
}
