use std::collections::BTreeMap;
use std::fmt::Write as _;

use nalgebra::Vector3;

use crate::error::{Error, Result};

/// Triangle mesh with optional per-vertex normals and a string metadata map.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MeshPatch {
    pub vertices: Vec<Vector3<f64>>,
    pub faces: Vec<[usize; 3]>,
    pub normals: Option<Vec<Vector3<f64>>>,
    pub meta: BTreeMap<String, String>,
}

impl MeshPatch {
    /// Triangulates a `rows x cols` vertex grid stored row-major. With `wrap`
    /// the last column is joined back to the first.
    pub fn grid(rows: usize, cols: usize, vertices: Vec<Vector3<f64>>, wrap: bool) -> Self {
        assert_eq!(vertices.len(), rows * cols, "grid vertex count");
        let col_quads = if wrap { cols } else { cols.saturating_sub(1) };
        let mut faces = Vec::with_capacity(2 * rows.saturating_sub(1) * col_quads);
        for i in 0..rows.saturating_sub(1) {
            for j in 0..col_quads {
                let jn = (j + 1) % cols;
                let a = i * cols + j;
                let b = (i + 1) * cols + j;
                let c = (i + 1) * cols + jn;
                let d = i * cols + jn;
                faces.push([a, d, c]);
                faces.push([a, c, b]);
            }
        }
        Self {
            vertices,
            faces,
            normals: None,
            meta: BTreeMap::new(),
        }
    }

    pub fn with_meta(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.meta.insert(key.into(), value.to_string());
        self
    }

    pub fn face_area(&self, face: [usize; 3]) -> f64 {
        let [a, b, c] = face.map(|i| self.vertices[i]);
        0.5 * (b - a).cross(&(c - a)).norm()
    }

    /// Face indices in range and every face area above `min_area`.
    pub fn validate(&self, min_area: f64) -> Result<()> {
        let n = self.vertices.len();
        for (k, f) in self.faces.iter().enumerate() {
            if f.iter().any(|&i| i >= n) {
                return Err(Error::Parse {
                    line: k,
                    msg: format!("face {k} references a vertex out of range"),
                });
            }
            if self.face_area(*f) <= min_area {
                return Err(Error::Parse {
                    line: k,
                    msg: format!("face {k} is degenerate"),
                });
            }
        }
        if let Some(normals) = &self.normals {
            if normals.len() != n {
                return Err(Error::Parse {
                    line: 0,
                    msg: "normal count differs from vertex count".into(),
                });
            }
        }
        Ok(())
    }

    /// Wavefront OBJ text. Metadata goes first as `# key: value` lines;
    /// numbers use the shortest representation that parses back exactly.
    pub fn to_obj(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.meta {
            let _ = writeln!(out, "# {k}: {v}");
        }
        for v in &self.vertices {
            let _ = writeln!(out, "v {} {} {}", v.x, v.y, v.z);
        }
        if let Some(normals) = &self.normals {
            for n in normals {
                let _ = writeln!(out, "vn {} {} {}", n.x, n.y, n.z);
            }
            for f in &self.faces {
                let [a, b, c] = f.map(|i| i + 1);
                let _ = writeln!(out, "f {a}//{a} {b}//{b} {c}//{c}");
            }
        } else {
            for f in &self.faces {
                let _ = writeln!(out, "f {} {} {}", f[0] + 1, f[1] + 1, f[2] + 1);
            }
        }
        out
    }

    /// Reads what [`MeshPatch::to_obj`] writes (triangles only).
    pub fn from_obj(text: &str) -> Result<Self> {
        let mut mesh = MeshPatch::default();
        let mut normals = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            let lineno = idx + 1;
            let err = |msg: &str| Error::Parse {
                line: lineno,
                msg: msg.to_owned(),
            };
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some((k, v)) = comment.trim_start().split_once(": ") {
                    mesh.meta.insert(k.to_owned(), v.to_owned());
                }
                continue;
            }
            let mut parts = line.split_whitespace();
            let tag = parts.next().unwrap_or_default();
            let rest: Vec<&str> = parts.collect();
            match tag {
                "v" | "vn" => {
                    if rest.len() != 3 {
                        return Err(err("expected three coordinates"));
                    }
                    let mut xyz = [0.0; 3];
                    for (slot, s) in xyz.iter_mut().zip(&rest) {
                        *slot = s.parse().map_err(|_| err("bad number"))?;
                    }
                    let p = Vector3::from(xyz);
                    if tag == "v" {
                        mesh.vertices.push(p);
                    } else {
                        normals.push(p);
                    }
                }
                "f" => {
                    if rest.len() != 3 {
                        return Err(err("only triangles are supported"));
                    }
                    let mut face = [0usize; 3];
                    for (slot, s) in face.iter_mut().zip(&rest) {
                        let first = s.split('/').next().unwrap_or_default();
                        let i: usize = first.parse().map_err(|_| err("bad index"))?;
                        if i == 0 {
                            return Err(err("indices are 1-based"));
                        }
                        *slot = i - 1;
                    }
                    mesh.faces.push(face);
                }
                _ => return Err(err("unknown record")),
            }
        }
        if !normals.is_empty() {
            mesh.normals = Some(normals);
        }
        Ok(mesh)
    }
}
