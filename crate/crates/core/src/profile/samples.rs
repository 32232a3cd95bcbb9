//! Sampled-profile CSV: header `s,a`, one knot per row, LF line endings.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};

pub fn read_samples_csv<R: BufRead>(reader: R) -> Result<(Vec<f64>, Vec<f64>)> {
    let mut knots = Vec::new();
    let mut values = Vec::new();
    let mut saw_header = false;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let line = line.strip_suffix('\r').unwrap_or(&line).trim();
        if line.is_empty() {
            continue;
        }
        if !saw_header {
            let cols: Vec<&str> = line.split(',').map(str::trim).collect();
            if cols != ["s", "a"] {
                return Err(Error::SampleFormat {
                    line: lineno,
                    message: format!("expected header \"s,a\", found {line:?}"),
                });
            }
            saw_header = true;
            continue;
        }
        let mut cols = line.split(',').map(str::trim);
        let (Some(s), Some(a), None) = (cols.next(), cols.next(), cols.next()) else {
            return Err(Error::SampleFormat {
                line: lineno,
                message: "expected exactly two columns".into(),
            });
        };
        let num = |t: &str| {
            t.parse::<f64>().map_err(|_| Error::SampleFormat {
                line: lineno,
                message: format!("not a number: {t:?}"),
            })
        };
        knots.push(num(s)?);
        values.push(num(a)?);
    }
    if !saw_header {
        return Err(Error::SampleFormat {
            line: 1,
            message: "empty file".into(),
        });
    }
    Ok((knots, values))
}

pub fn write_samples_csv<W: Write>(mut w: W, knots: &[f64], values: &[f64]) -> Result<()> {
    w.write_all(b"s,a\n")?;
    for (s, a) in knots.iter().zip(values) {
        writeln!(w, "{s},{a}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let knots = [0.0, 0.25, 1.0 / 3.0, 1.5];
        let values = [0.0, 0.2, 0.1, 1e-17];
        let mut buf = Vec::new();
        write_samples_csv(&mut buf, &knots, &values).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("s,a\n"));
        let (k, v) = read_samples_csv(buf.as_slice()).unwrap();
        assert_eq!(k, knots);
        assert_eq!(v, values);
    }

    #[test]
    fn rejects_bad_rows() {
        assert!(read_samples_csv("x,y\n0,0\n".as_bytes()).is_err());
        assert!(read_samples_csv("s,a\n0,0,1\n".as_bytes()).is_err());
        let err = read_samples_csv("s,a\n0,0\n1,abc\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::SampleFormat { line: 3, .. }));
        assert!(read_samples_csv("".as_bytes()).is_err());
    }
}
