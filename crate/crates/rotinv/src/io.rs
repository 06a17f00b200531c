//! Raster and point-cloud input.

use std::fs;
use std::path::Path;

use rotinv_core::moments::Point;
use rotinv_core::{PointCloud, RasterImage};

use crate::error::{Error, Result};

/// A loaded moment source.
#[derive(Clone, Debug, PartialEq)]
pub enum Input {
    Raster(RasterImage),
    Cloud(PointCloud),
}

/// Reads a PGM (P2 or P5, maxval up to 65535, 16-bit samples big-endian).
/// Samples are divided by maxval.
pub fn read_pgm(bytes: &[u8]) -> Result<RasterImage> {
    let mut header = PgmHeader { bytes, pos: 0 };
    let magic = header.token()?;
    let binary = match magic.as_str() {
        "P2" => false,
        "P5" => true,
        other => return Err(Error::Format(format!("not a PGM file (magic {other:?})"))),
    };
    let width = header.number()?;
    let height = header.number()?;
    let maxval = header.number()?;
    if width == 0 || height == 0 {
        return Err(Error::Format("PGM dimensions must be positive".into()));
    }
    if maxval == 0 || maxval > 65535 {
        return Err(Error::Format(format!("PGM maxval {maxval} outside 1..=65535")));
    }
    let count = width * height;
    let scale = maxval as f64;
    let samples: Vec<usize> = if binary {
        // exactly one whitespace byte separates the header from the raster
        let start = header.pos + 1;
        let wide = maxval > 255;
        let need = count * if wide { 2 } else { 1 };
        let data = bytes
            .get(start..start + need)
            .ok_or_else(|| Error::Format("PGM raster is truncated".into()))?;
        if wide {
            data.chunks_exact(2)
                .map(|b| u16::from_be_bytes([b[0], b[1]]) as usize)
                .collect()
        } else {
            data.iter().map(|&b| b as usize).collect()
        }
    } else {
        (0..count).map(|_| header.number()).collect::<Result<_>>()?
    };
    if let Some(v) = samples.iter().find(|&&v| v > maxval) {
        return Err(Error::Format(format!("PGM sample {v} exceeds maxval {maxval}")));
    }
    let pixels = samples.into_iter().map(|v| v as f64 / scale).collect();
    Ok(RasterImage::new(width, height, pixels)?)
}

struct PgmHeader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl PgmHeader<'_> {
    fn token(&mut self) -> Result<String> {
        loop {
            match self.bytes.get(self.pos) {
                Some(b'#') => {
                    while !matches!(self.bytes.get(self.pos), None | Some(b'\n')) {
                        self.pos += 1;
                    }
                }
                Some(b) if b.is_ascii_whitespace() => self.pos += 1,
                Some(_) => break,
                None => return Err(Error::Format("PGM ends early".into())),
            }
        }
        let start = self.pos;
        while matches!(self.bytes.get(self.pos), Some(b) if !b.is_ascii_whitespace() && *b != b'#') {
            self.pos += 1;
        }
        Ok(String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
    }

    fn number(&mut self) -> Result<usize> {
        let t = self.token()?;
        t.parse()
            .map_err(|_| Error::Format(format!("PGM: expected a number, found {t:?}")))
    }
}

/// Parses `x,y[,w]` lines; `#` starts a comment and `w` defaults to 1.
pub fn read_csv(text: &str) -> Result<PointCloud> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut points = Vec::new();
    for record in reader.records() {
        let record = record?;
        let line = record.position().map_or(0, |p| p.line());
        if record.iter().all(str::is_empty) {
            continue;
        }
        if record.len() < 2 || record.len() > 3 {
            return Err(Error::Format(format!(
                "line {line}: expected x,y or x,y,w but found {} fields",
                record.len()
            )));
        }
        let field = |i: usize| -> Result<f64> {
            let raw = &record[i];
            raw.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::Format(format!("line {line}: bad number {raw:?}")))
        };
        let w = if record.len() == 3 && !record[2].is_empty() {
            field(2)?
        } else {
            1.0
        };
        points.push(Point { x: field(0)?, y: field(1)?, w });
    }
    if points.is_empty() {
        return Err(Error::Format("point cloud has no points".into()));
    }
    Ok(PointCloud::new(points))
}

/// Loads `.pgm` as a raster and `.csv` as a point cloud.
pub fn load_input(path: &Path) -> Result<Input> {
    let ext = path
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    let bytes = fs::read(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    match ext.as_deref() {
        Some("pgm") => Ok(Input::Raster(read_pgm(&bytes)?)),
        Some("csv") => {
            let text = String::from_utf8(bytes)
                .map_err(|_| Error::Format(format!("{}: not UTF-8", path.display())))?;
            Ok(Input::Cloud(read_csv(&text)?))
        }
        _ => Err(Error::Format(format!(
            "{}: unknown input type, expected .pgm or .csv",
            path.display()
        ))),
    }
}

/// Encodes an 8-bit binary PGM, clamping samples to `[0, 1]`.
pub fn write_pgm(img: &RasterImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend(
        img.pixels()
            .iter()
            .map(|v| (v.clamp(0.0, 1.0) * 255.0).round() as u8),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_points() {
        let pc = read_csv("# shape\n0,0\n1.5, -2, 0.25\n\n3,4,\n").unwrap();
        assert_eq!(
            pc.points,
            vec![
                Point { x: 0.0, y: 0.0, w: 1.0 },
                Point { x: 1.5, y: -2.0, w: 0.25 },
                Point { x: 3.0, y: 4.0, w: 1.0 },
            ]
        );
        assert!(matches!(read_csv("1,2,3,4\n"), Err(Error::Format(_))));
        assert!(matches!(read_csv("1,abc\n"), Err(Error::Format(_))));
        assert!(matches!(read_csv("# nothing\n"), Err(Error::Format(_))));
    }

    #[test]
    fn pgm_ascii_and_binary() {
        let p2 = b"P2\n# comment\n3 2\n4\n0 1 2\n3 4 0\n";
        let img = read_pgm(p2).unwrap();
        assert_eq!((img.width(), img.height()), (3, 2));
        let expect = [0.0, 0.25, 0.5, 0.75, 1.0, 0.0];
        assert_eq!(img.pixels(), expect);

        let mut p5 = b"P5 2 1 65535\n".to_vec();
        p5.extend([0x80, 0x00, 0xff, 0xff]);
        let img = read_pgm(&p5).unwrap();
        assert!((img.pixels()[0] - 32768.0 / 65535.0).abs() < 1e-12);
        assert_eq!(img.pixels()[1], 1.0);

        let round = read_pgm(&write_pgm(&img)).unwrap();
        assert_eq!(round.pixels()[1], 1.0);
        assert!(read_pgm(b"P7 nonsense").is_err());
        assert!(read_pgm(b"P2 2 2 3 0 1 2").is_err());
        assert!(read_pgm(b"P2 1 1 3 7").is_err());
        assert!(read_pgm(b"P5 2 2 255\n\x01").is_err());
        assert!(read_pgm(b"P2 1 1 70000 1").is_err());
    }
}
