//! The `.scx` text format: UTF-8, `#` comments to end of line, one
//! `vertices` line followed by zero or more `facet` lines, whitespace-
//! separated tokens. Declared-but-unused vertices become ghosts.

use crate::complex::Complex;
use crate::error::{MacxError, Result};

pub fn parse_scx(text: &str) -> Result<Complex> {
    let mut vertices: Option<Vec<String>> = None;
    let mut faces: Vec<Vec<String>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut tokens = line.split_whitespace();
        let Some(head) = tokens.next() else { continue };
        let rest: Vec<String> = tokens.map(|t| t.to_string()).collect();
        match head {
            "vertices" => {
                if vertices.is_some() {
                    return Err(MacxError::Parse {
                        line: lineno + 1,
                        msg: "duplicate `vertices` line".into(),
                    });
                }
                if rest.is_empty() {
                    return Err(MacxError::Parse {
                        line: lineno + 1,
                        msg: "empty `vertices` line".into(),
                    });
                }
                vertices = Some(rest);
            }
            "facet" => {
                if vertices.is_none() {
                    return Err(MacxError::Parse {
                        line: lineno + 1,
                        msg: "`facet` before `vertices`".into(),
                    });
                }
                faces.push(rest);
            }
            other => {
                return Err(MacxError::Parse {
                    line: lineno + 1,
                    msg: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    let vertices = vertices.ok_or(MacxError::Parse { line: 0, msg: "missing `vertices` line".into() })?;
    Complex::from_labels(vertices, faces)
}

/// Render a complex so that parsing the output reproduces it exactly:
/// the ground set in order, then the facets in canonical order.
pub fn render_scx(k: &Complex) -> String {
    let mut out = String::from("vertices");
    for l in k.ground().labels() {
        out.push(' ');
        out.push_str(l);
    }
    out.push('\n');
    for f in k.facets() {
        if f.is_empty() {
            continue;
        }
        out.push_str("facet");
        for l in k.ground().labels_of(f) {
            out.push(' ');
            out.push_str(&l);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_boundary_triangle() {
        let k = parse_scx("vertices 1 2 3\nfacet 1 2\nfacet 2 3\nfacet 1 3\n").unwrap();
        assert_eq!(k.facet_count(), 3);
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn parse_ghosts_and_comments() {
        let k = parse_scx("# empty complex\nvertices a b\n").unwrap();
        assert!(k.is_empty_complex());
        assert_eq!(k.ghost_vertices().len(), 2);
        let k = parse_scx("vertices a b # trailing\nfacet a # one vertex\n").unwrap();
        assert_eq!(k.ghost_vertices().len(), 1);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_scx(""), Err(MacxError::Parse { .. })));
        assert!(matches!(parse_scx("vertices\n"), Err(MacxError::Parse { .. })));
        assert!(matches!(parse_scx("facet 1\nvertices 1\n"), Err(MacxError::Parse { .. })));
        assert!(matches!(parse_scx("vertices a a\n"), Err(MacxError::DuplicateLabel(_))));
        assert!(matches!(parse_scx("vertices a\nfacet b\n"), Err(MacxError::UnknownLabel(_))));
        assert!(matches!(parse_scx("simplex 1 2\n"), Err(MacxError::Parse { .. })));
    }

    #[test]
    fn round_trip() {
        let k = parse_scx("vertices w a b c\nfacet b a\nfacet c\n").unwrap();
        let text = render_scx(&k);
        let k2 = parse_scx(&text).unwrap();
        assert_eq!(k, k2);
        assert_eq!(render_scx(&k2), text);
    }
}
