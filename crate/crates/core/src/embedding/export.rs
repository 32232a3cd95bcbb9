use std::io::{self, BufRead, Write};

use super::mesh::Mesh;
use crate::error::{Error, Result};

/// Wavefront OBJ: `v x y z` lines, then 1-based `f i j k` lines.
pub fn write_obj<W: Write>(mesh: &Mesh, mut w: W) -> io::Result<()> {
    for v in &mesh.vertices {
        writeln!(w, "v {:?} {:?} {:?}", v[0], v[1], v[2])?;
    }
    for t in &mesh.triangles {
        writeln!(w, "f {} {} {}", t[0] + 1, t[1] + 1, t[2] + 1)?;
    }
    w.flush()
}

/// Reads the subset of OBJ written by [`write_obj`]: `v` and triangular
/// `f` records. Other record types are ignored.
pub fn read_obj<R: BufRead>(r: R) -> Result<(Vec<[f64; 3]>, Vec<[u32; 3]>)> {
    let mut vertices = Vec::new();
    let mut faces = Vec::new();
    for (i, line) in r.lines().enumerate() {
        let line = line?;
        let bad = |message: &str| Error::SampleFormat {
            line: i + 1,
            message: message.to_string(),
        };
        let mut fields = line.split_whitespace();
        match fields.next() {
            Some("v") => {
                let xyz: Vec<f64> = fields
                    .map(str::parse)
                    .collect::<Result<_, _>>()
                    .map_err(|_| bad("bad vertex coordinate"))?;
                let xyz: [f64; 3] = xyz.try_into().map_err(|_| bad("vertex needs 3 coordinates"))?;
                vertices.push(xyz);
            }
            Some("f") => {
                let idx: Vec<u32> = fields
                    .map(|f| f.split('/').next().unwrap_or("").parse::<u32>())
                    .collect::<Result<_, _>>()
                    .map_err(|_| bad("bad face index"))?;
                let idx: [u32; 3] = idx.try_into().map_err(|_| bad("face must be a triangle"))?;
                if idx.contains(&0) {
                    return Err(bad("face indices are 1-based"));
                }
                faces.push(idx.map(|k| k - 1));
            }
            _ => {}
        }
    }
    Ok((vertices, faces))
}

/// Binary STL: 80-byte header, little-endian triangle count, then per
/// triangle a unit normal, three vertices (all `f32`) and a zero `u16`.
pub fn write_stl<W: Write>(mesh: &Mesh, mut w: W) -> io::Result<()> {
    let mut header = [0u8; 80];
    let tag = b"revsurf binary stl";
    header[..tag.len()].copy_from_slice(tag);
    w.write_all(&header)?;
    w.write_all(&(mesh.triangles.len() as u32).to_le_bytes())?;
    for (i, t) in mesh.triangles.iter().enumerate() {
        let n = mesh.face_normal(i);
        let len = (n[0] * n[0] + n[1] * n[1] + n[2] * n[2]).sqrt();
        let n = if len > 0.0 { n.map(|c| c / len) } else { [0.0; 3] };
        for c in n {
            w.write_all(&(c as f32).to_le_bytes())?;
        }
        for &k in t {
            for c in mesh.vertices[k as usize] {
                w.write_all(&(c as f32).to_le_bytes())?;
            }
        }
        w.write_all(&0u16.to_le_bytes())?;
    }
    w.flush()
}

/// Size in bytes of a binary STL with `n` triangles.
pub fn stl_size(n: usize) -> usize {
    84 + 50 * n
}
