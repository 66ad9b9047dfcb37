//! The bundled group/curve catalog: plain-text documents transcribing
//! explicit matrices and polynomials, a loader with strict order
//! verification, and the built form used by the verification scenarios.

use crate::cyclo::{parse_cyclo, CycloError, CycloNum};
use crate::linalg::Matrix;
use crate::matgroup::{Ambient, GroupError, MatrixGroup, ProjectiveMap, DEFAULT_CLOSURE_CAP};
use crate::polyring::{parse_poly, MultiPoly, PolyParseError};
use std::collections::BTreeMap;
use thiserror::Error;

pub const BUNDLED_GROUPS: &str = include_str!("data/groups.cat");
pub const BUNDLED_CURVES: &str = include_str!("data/curves.cat");

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("{file}:{line}: {msg}")]
    Parse {
        file: String,
        line: usize,
        msg: String,
    },
    #[error("{file}:{line}: {source}")]
    Cyclo {
        file: String,
        line: usize,
        #[source]
        source: CycloError,
    },
    #[error("{file}:{line}: {source}")]
    Poly {
        file: String,
        line: usize,
        #[source]
        source: PolyParseError,
    },
    #[error("group '{group}': {source}")]
    Group {
        group: String,
        #[source]
        source: GroupError,
    },
    #[error("group '{group}': generator '{gen}' has no finite matrix order below {cap}")]
    InfiniteLift {
        group: String,
        gen: String,
        cap: u64,
    },
    #[error("group '{group}': computed projective order {actual} != expected {expected}")]
    OrderMismatch {
        group: String,
        expected: usize,
        actual: usize,
    },
    #[error("group '{group}': computed linear order {actual} != expected {expected}")]
    LinearOrderMismatch {
        group: String,
        expected: usize,
        actual: usize,
    },
    #[error("group '{group}': relation '{lhs} = {rhs}' fails")]
    RelationFails {
        group: String,
        lhs: String,
        rhs: String,
    },
    #[error("unknown group '{0}'")]
    UnknownGroup(String),
    #[error("unknown curve '{0}'")]
    UnknownCurve(String),
    #[error("io: {0}")]
    Io(String),
}

/// One relation: lhs = rhs, optionally compared on lifts.
#[derive(Debug, Clone)]
pub struct Relation {
    pub lhs: String,
    pub rhs: String,
    pub linear: bool,
}

/// Parsed (unbuilt) group document.
#[derive(Debug, Clone)]
pub struct GroupSpec {
    pub name: String,
    pub ambient: Ambient,
    pub conductor: u32,
    pub generators: Vec<(String, ProjectiveMap)>,
    pub relations: Vec<Relation>,
    pub expected_projective_order: Option<usize>,
    pub expected_linear_order: Option<usize>,
    pub provenance: String,
}

#[derive(Debug, Clone)]
pub struct CurveSpec {
    pub name: String,
    pub poly: MultiPoly,
}

#[derive(Debug, Clone, Default)]
pub struct Catalog {
    pub groups: Vec<GroupSpec>,
    pub curves: Vec<CurveSpec>,
}

impl Catalog {
    pub fn bundled() -> Result<Self, CatalogError> {
        let mut cat = Catalog::default();
        parse_groups(BUNDLED_GROUPS, "groups.cat", &mut cat)?;
        parse_curves(BUNDLED_CURVES, "curves.cat", &mut cat)?;
        Ok(cat)
    }

    /// Load catalog documents from a file path (group and/or curve
    /// documents may be mixed in one file).
    pub fn load_path(path: &std::path::Path) -> Result<Self, CatalogError> {
        let text = std::fs::read_to_string(path).map_err(|e| CatalogError::Io(e.to_string()))?;
        let name = path.display().to_string();
        let mut cat = Catalog::default();
        parse_groups(&text, &name, &mut cat)?;
        parse_curves(&text, &name, &mut cat)?;
        Ok(cat)
    }

    pub fn group_spec(&self, name: &str) -> Result<&GroupSpec, CatalogError> {
        self.groups
            .iter()
            .find(|g| g.name == name)
            .ok_or_else(|| CatalogError::UnknownGroup(name.to_string()))
    }

    pub fn curve(&self, name: &str) -> Result<&MultiPoly, CatalogError> {
        self.curves
            .iter()
            .find(|c| c.name == name)
            .map(|c| &c.poly)
            .ok_or_else(|| CatalogError::UnknownCurve(name.to_string()))
    }

    /// Build every group with strict verification: finite lift orders,
    /// expected closure orders, and all declared relations.
    pub fn build_strict(&self) -> Result<BuiltCatalog, CatalogError> {
        let mut groups = BTreeMap::new();
        for spec in &self.groups {
            let group = build_group(spec)?;
            groups.insert(spec.name.clone(), group);
        }
        let curves = self
            .curves
            .iter()
            .map(|c| (c.name.clone(), c.poly.clone()))
            .collect();
        Ok(BuiltCatalog {
            groups,
            curves,
            specs: self.clone(),
        })
    }
}

fn build_group(spec: &GroupSpec) -> Result<MatrixGroup, CatalogError> {
    let lift_cap = 4 * DEFAULT_CLOSURE_CAP as u64;
    for (name, gen) in &spec.generators {
        gen.matrix_order(lift_cap)
            .map_err(|_| CatalogError::InfiniteLift {
                group: spec.name.clone(),
                gen: name.clone(),
                cap: lift_cap,
            })?;
    }
    let group = MatrixGroup::generate(
        spec.name.clone(),
        spec.ambient,
        spec.generators.clone(),
        DEFAULT_CLOSURE_CAP,
    )
    .map_err(|e| CatalogError::Group {
        group: spec.name.clone(),
        source: e,
    })?;
    if let Some(expected) = spec.expected_projective_order {
        if group.order() != expected {
            return Err(CatalogError::OrderMismatch {
                group: spec.name.clone(),
                expected,
                actual: group.order(),
            });
        }
    }
    if let Some(expected) = spec.expected_linear_order {
        if group.linear_order() != expected {
            return Err(CatalogError::LinearOrderMismatch {
                group: spec.name.clone(),
                expected,
                actual: group.linear_order(),
            });
        }
    }
    for rel in &spec.relations {
        let holds = group
            .verify_relation(&rel.lhs, &rel.rhs, rel.linear)
            .map_err(|e| CatalogError::Group {
                group: spec.name.clone(),
                source: e,
            })?;
        if !holds {
            return Err(CatalogError::RelationFails {
                group: spec.name.clone(),
                lhs: rel.lhs.clone(),
                rhs: rel.rhs.clone(),
            });
        }
    }
    Ok(group)
}

/// Fully built catalog: closed groups plus the curve library.
#[derive(Debug, Clone)]
pub struct BuiltCatalog {
    pub groups: BTreeMap<String, MatrixGroup>,
    pub curves: BTreeMap<String, MultiPoly>,
    pub specs: Catalog,
}

impl BuiltCatalog {
    pub fn group(&self, name: &str) -> Result<&MatrixGroup, CatalogError> {
        self.groups
            .get(name)
            .ok_or_else(|| CatalogError::UnknownGroup(name.to_string()))
    }

    pub fn curve(&self, name: &str) -> Result<&MultiPoly, CatalogError> {
        self.curves
            .get(name)
            .ok_or_else(|| CatalogError::UnknownCurve(name.to_string()))
    }
}

fn err(file: &str, line: usize, msg: impl Into<String>) -> CatalogError {
    CatalogError::Parse {
        file: file.to_string(),
        line,
        msg: msg.into(),
    }
}

fn parse_groups(text: &str, file: &str, cat: &mut Catalog) -> Result<(), CatalogError> {
    struct Partial {
        name: String,
        line: usize,
        ambient: Option<Ambient>,
        conductor: u32,
        generators: Vec<(String, String, bool, usize)>,
        relations: Vec<Relation>,
        expected: Option<usize>,
        expected_linear: Option<usize>,
        provenance: String,
    }
    let mut current: Option<Partial> = None;
    let finish = |p: Partial, cat: &mut Catalog| -> Result<(), CatalogError> {
        let ambient = p
            .ambient
            .ok_or_else(|| err(file, p.line, format!("group '{}' missing ambient", p.name)))?;
        let mut gens = Vec::new();
        for (name, text, swap, line) in &p.generators {
            let matrix = parse_matrix(text, ambient.dim(), p.conductor, file, *line)?;
            let map = ProjectiveMap::new(ambient, matrix, *swap).map_err(|e| CatalogError::Group {
                group: p.name.clone(),
                source: e,
            })?;
            gens.push((name.clone(), map));
        }
        cat.groups.push(GroupSpec {
            name: p.name,
            ambient,
            conductor: p.conductor,
            generators: gens,
            relations: p.relations,
            expected_projective_order: p.expected,
            expected_linear_order: p.expected_linear,
            provenance: p.provenance,
        });
        Ok(())
    };
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (keyword, rest) = line.split_once(' ').unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "group" => {
                if let Some(p) = current.take() {
                    finish(p, cat)?;
                }
                current = Some(Partial {
                    name: rest.to_string(),
                    line: lineno,
                    ambient: None,
                    conductor: 1,
                    generators: Vec::new(),
                    relations: Vec::new(),
                    expected: None,
                    expected_linear: None,
                    provenance: String::new(),
                });
            }
            "curve" => continue, // handled by parse_curves
            _ => {
                let Some(p) = current.as_mut() else {
                    continue;
                };
                match keyword {
                    "ambient" => {
                        p.ambient = Some(match rest {
                            "P2" => Ambient::P2,
                            "P3" => Ambient::P3,
                            "P1xP1" => Ambient::P1xP1,
                            other => return Err(err(file, lineno, format!("bad ambient '{other}'"))),
                        });
                    }
                    "conductor" => {
                        p.conductor = rest
                            .parse()
                            .map_err(|_| err(file, lineno, "bad conductor"))?;
                    }
                    "gen" => {
                        let (name, matrix) = rest
                            .split_once('=')
                            .ok_or_else(|| err(file, lineno, "gen NAME = [[...]]"))?;
                        let mut matrix = matrix.trim().to_string();
                        let swap = matrix.ends_with("swap");
                        if swap {
                            matrix = matrix.trim_end_matches("swap").trim().to_string();
                        }
                        p.generators
                            .push((name.trim().to_string(), matrix, swap, lineno));
                    }
                    "relation" => {
                        let mut body = rest.to_string();
                        let linear = body.ends_with("linear");
                        if linear {
                            body = body.trim_end_matches("linear").trim().to_string();
                        }
                        let (lhs, rhs) = body
                            .split_once('=')
                            .ok_or_else(|| err(file, lineno, "relation LHS = RHS"))?;
                        p.relations.push(Relation {
                            lhs: lhs.trim().to_string(),
                            rhs: rhs.trim().to_string(),
                            linear,
                        });
                    }
                    "expect" => {
                        // expect order N [linear M]
                        let parts: Vec<&str> = rest.split_whitespace().collect();
                        if parts.len() < 2 || parts[0] != "order" {
                            return Err(err(file, lineno, "expect order N [linear M]"));
                        }
                        p.expected = Some(
                            parts[1]
                                .parse()
                                .map_err(|_| err(file, lineno, "bad order"))?,
                        );
                        if parts.len() == 4 && parts[2] == "linear" {
                            p.expected_linear = Some(
                                parts[3]
                                    .parse()
                                    .map_err(|_| err(file, lineno, "bad linear order"))?,
                            );
                        }
                    }
                    "provenance" => {
                        p.provenance = rest.to_string();
                    }
                    other => return Err(err(file, lineno, format!("unknown keyword '{other}'"))),
                }
            }
        }
    }
    if let Some(p) = current.take() {
        finish(p, cat)?;
    }
    Ok(())
}

/// `[[e,e,e],[e,e,e],...]` with entries in the cyclotomic grammar.
fn parse_matrix(
    text: &str,
    dim: usize,
    conductor: u32,
    file: &str,
    line: usize,
) -> Result<Matrix, CatalogError> {
    let text = text.trim();
    let inner = text
        .strip_prefix("[[")
        .and_then(|t| t.strip_suffix("]]"))
        .ok_or_else(|| err(file, line, "matrix must look like [[...],[...]]"))?;
    let rows: Vec<&str> = inner.split("],[").collect();
    if rows.len() != dim {
        return Err(err(
            file,
            line,
            format!("expected {dim} rows, found {}", rows.len()),
        ));
    }
    let mut data = Vec::with_capacity(dim * dim);
    for row in rows {
        let entries: Vec<&str> = row.split(',').collect();
        if entries.len() != dim {
            return Err(err(
                file,
                line,
                format!("expected {dim} entries per row, found {}", entries.len()),
            ));
        }
        for e in entries {
            let v: CycloNum =
                parse_cyclo(e.trim(), conductor).map_err(|source| CatalogError::Cyclo {
                    file: file.to_string(),
                    line,
                    source,
                })?;
            data.push(v);
        }
    }
    Ok(Matrix::new(dim, dim, data))
}

fn parse_curves(text: &str, file: &str, cat: &mut Catalog) -> Result<(), CatalogError> {
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if !line.starts_with("curve ") {
            continue;
        }
        // curve NAME vars N (degree D | bidegree A,B) = POLY
        let (head, poly_text) = line
            .split_once('=')
            .ok_or_else(|| err(file, lineno, "curve ... = POLY"))?;
        let parts: Vec<&str> = head.split_whitespace().collect();
        if parts.len() < 5 || parts[0] != "curve" || parts[2] != "vars" {
            return Err(err(file, lineno, "curve NAME vars N degree D = POLY"));
        }
        let name = parts[1].to_string();
        let nvars: usize = parts[3]
            .parse()
            .map_err(|_| err(file, lineno, "bad variable count"))?;
        let split = match parts[4] {
            "degree" => None,
            "bidegree" => Some(2),
            other => return Err(err(file, lineno, format!("bad grading keyword '{other}'"))),
        };
        let poly =
            parse_poly(poly_text.trim(), nvars, split).map_err(|source| CatalogError::Poly {
                file: file.to_string(),
                line: lineno,
                source,
            })?;
        cat.curves.push(CurveSpec { name, poly });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bundled_catalog_parses() {
        let cat = Catalog::bundled().unwrap();
        let names: Vec<&str> = cat.groups.iter().map(|g| g.name.as_str()).collect();
        for expected in [
            "c3c7",
            "gamma3",
            "l27",
            "m9",
            "n72",
            "t48",
            "h_d16",
            "q8",
            "valentiner",
        ] {
            assert!(names.contains(&expected), "missing group {expected}");
        }
        assert!(cat.curve("klein").is_ok());
        assert!(cat.curve("nope").is_err());
    }

    #[test]
    fn empty_catalog_is_empty() {
        let mut cat = Catalog::default();
        parse_groups("", "empty", &mut cat).unwrap();
        parse_curves("", "empty", &mut cat).unwrap();
        assert!(cat.groups.is_empty() && cat.curves.is_empty());
    }

    #[test]
    fn singular_generator_rejected() {
        let text = "group bad\nambient P2\nconductor 1\ngen z = [[1,0,0],[1,0,0],[0,0,1]]\n";
        let mut cat = Catalog::default();
        let result = parse_groups(text, "inline", &mut cat);
        assert!(matches!(result, Err(CatalogError::Group { .. })));
    }

    #[test]
    fn order_mismatch_rejected() {
        let text = "group tiny\nambient P2\nconductor 3\ngen g = [[1,0,0],[0,z3,0],[0,0,z3^2]]\nexpect order 5\n";
        let mut cat = Catalog::default();
        parse_groups(text, "inline", &mut cat).unwrap();
        let result = cat.build_strict();
        assert!(matches!(result, Err(CatalogError::OrderMismatch { .. })));
    }
}
