//! Canonical configuration corpus: the reference examples exercised by the
//! test suite and shipped by `emit_fixture_suite` for CLI experiments.
//!
//! Positive fixtures are admissible plane configurations (plus one k = 3
//! point polytope); the negatives are deliberately inadmissible and tagged
//! so callers can assert the expected rejection.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

/// One named configuration with a one-line description.
#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    /// True when the fixture is meant to fail validation.
    pub negative: bool,
    pub note: &'static str,
}

/// The full corpus, in canonical order.
pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "triangle",
        text: "# three rays spanning the plane; the polytope is a point\n2 3\n1+0i\n0+1i\n-1-1i\n",
        negative: false,
        note: "smallest admissible plane configuration; the manifold is eight points",
    },
    Fixture {
        name: "scalene",
        text: "# three rays with uneven angles\n2 3\n2+0i\n-1+2i\n-1-2i\n",
        negative: false,
        note: "asymmetric triangle realization used for oracle cross checks",
    },
    Fixture {
        name: "simplex3",
        text: "# k = 3 example: coordinate axes plus the negative diagonal\n3 4\n1 0 0\n0 1 0\n0 0 1\n-1 -1 -1\n",
        negative: false,
        note: "three-constraint point polytope; sixteen reflected points",
    },
    Fixture {
        name: "quad_pair",
        text: "# one doubled ray plus two singles\n2 4\n1+0i\n1+0i\n0+1i\n-1-1i\n",
        negative: false,
        note: "class sizes (2,1,1); closed type S^1 x S^1 x S^3 in the doubled model",
    },
    Fixture {
        name: "quad_scalene",
        text: "# four distinct rays, two of which merge\n2 4\n1+0i\n0+1i\n-2-1i\n-1-2i\n",
        negative: false,
        note: "distinct rays whose lower pair merges into one class: sizes (1,1,2)",
    },
    Fixture {
        name: "quint_triple",
        text: "# one tripled ray plus two singles\n2 5\n1+0i\n1+0i\n1+0i\n0+1i\n-1-1i\n",
        negative: false,
        note: "class sizes (3,1,1); closed type S^1 x S^1 x S^5 in the doubled model",
    },
    Fixture {
        name: "quint_pairs",
        text: "# two doubled rays plus one single\n2 5\n0+1i\n0+1i\n1+0i\n-1-1i\n-1-1i\n",
        negative: false,
        note: "class sizes (2,1,2); closed type S^1 x S^3 x S^3 in the doubled model",
    },
    Fixture {
        name: "pentagon",
        text: "# five distinct rays at roughly even angles\n2 5\n1+0i\n1+3i\n-4+3i\n-3-4i\n3-4i\n",
        negative: false,
        note: "rational pentagon; the surface of genus five, #_5 (S^3 x S^4) doubled",
    },
    Fixture {
        name: "pentagon_first_doubled",
        text: "# pentagon rays with the first doubled\n2 6\n1+0i\n1+0i\n1+3i\n-4+3i\n-3-4i\n3-4i\n",
        negative: false,
        note: "class sizes (2,1,1,1,1); doubled model #_3 (S^3 x S^6) #_2 (S^4 x S^5)",
    },
    Fixture {
        name: "heptagon",
        text: "# seven distinct rays at roughly even angles\n2 7\n1+0i\n4+5i\n-2+9i\n-9+4i\n-9-4i\n-2-9i\n4-5i\n",
        negative: false,
        note: "rational heptagon; doubled model #_7 (S^5 x S^6)",
    },
    Fixture {
        name: "pentagon_first_tripled",
        text: "# pentagon rays with the first tripled\n2 7\n1+0i\n1+0i\n1+0i\n1+3i\n-4+3i\n-3-4i\n3-4i\n",
        negative: false,
        note: "open book at coordinate 1 has a five-ray binding and a disk-bundle page sum",
    },
    Fixture {
        name: "pentagon_second_tripled",
        text: "# pentagon rays with the second tripled\n2 7\n1+0i\n1+3i\n1+3i\n1+3i\n-4+3i\n-3-4i\n3-4i\n",
        negative: false,
        note: "opening at the singleton first class gives binding S^1 x S^3 x S^5",
    },
    Fixture {
        name: "pentagon_third_tripled",
        text: "# pentagon rays with the third tripled\n2 7\n1+0i\n1+3i\n-4+3i\n-4+3i\n-4+3i\n-3-4i\n3-4i\n",
        negative: false,
        note: "opening at the singleton first class gives binding S^1 x S^1 x S^7",
    },
    Fixture {
        name: "negative_antipodal",
        text: "# vectors 1 and 2 are antipodal\n2 4\n1+0i\n-1+0i\n0+1i\n-1-1i\n",
        negative: true,
        note: "fails weak hyperbolicity with witness {1, 2}",
    },
    Fixture {
        name: "negative_zero",
        text: "# the first vector vanishes\n2 3\n0+0i\n1+0i\n-1-1i\n",
        negative: true,
        note: "fails weak hyperbolicity with witness {1}",
    },
    Fixture {
        name: "negative_outside",
        text: "# all rays in one half plane\n2 3\n1+0i\n0+1i\n1+1i\n",
        negative: true,
        note: "weakly hyperbolic but the origin is outside the hull: empty manifold",
    },
];

/// Looks a fixture up by name.
pub fn builtin(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

/// The admissible subset.
pub fn positive_fixtures() -> impl Iterator<Item = &'static Fixture> {
    FIXTURES.iter().filter(|f| !f.negative)
}

/// Writes every fixture as `<name>.cfg` plus a `README.md` with the notes.
/// Deterministic: repeated runs produce identical bytes. Returns the paths
/// written.
pub fn emit_fixture_suite(dir: &Path) -> io::Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::with_capacity(FIXTURES.len() + 1);
    let mut readme = String::from("# Configuration fixtures\n\nFormat: first line `k n`, then one vector per line (`a+bi` shorthand for k = 2).\n\n");
    for f in FIXTURES {
        let path = dir.join(format!("{}.cfg", f.name));
        fs::write(&path, f.text)?;
        let tag = if f.negative { " (negative)" } else { "" };
        readme.push_str(&format!("- `{}.cfg`{}: {}\n", f.name, tag, f.note));
        written.push(path);
    }
    let readme_path = dir.join("README.md");
    fs::write(&readme_path, readme)?;
    written.push(readme_path);
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::{check_weak_hyperbolicity, parse_configuration};
    use crate::polytope::build_face_lattice;

    #[test]
    fn every_fixture_parses_and_validates_as_tagged() {
        assert!(FIXTURES.len() >= 12);
        for f in FIXTURES {
            let cfg = parse_configuration(f.text).expect(f.name);
            let wh = check_weak_hyperbolicity(&cfg);
            if f.negative {
                let rejected = !wh.is_ok()
                    || build_face_lattice(&cfg).map(|l| l.empty_manifold).unwrap_or(true);
                assert!(rejected, "negative fixture {} was accepted", f.name);
            } else {
                assert!(wh.is_ok(), "fixture {} fails hyperbolicity", f.name);
                let lat = build_face_lattice(&cfg).expect(f.name);
                assert!(!lat.empty_manifold, "fixture {} is empty", f.name);
            }
        }
    }

    #[test]
    fn suite_emission_is_deterministic() {
        let dir = tempfile::tempdir().unwrap();
        let first = emit_fixture_suite(dir.path()).unwrap();
        let snapshot: Vec<Vec<u8>> =
            first.iter().map(|p| std::fs::read(p).unwrap()).collect();
        let second = emit_fixture_suite(dir.path()).unwrap();
        assert_eq!(first, second);
        for (path, bytes) in second.iter().zip(snapshot) {
            assert_eq!(std::fs::read(path).unwrap(), bytes, "{path:?} changed");
        }
        assert!(first.iter().any(|p| p.ends_with("pentagon.cfg")));
        assert!(first.iter().any(|p| p.ends_with("README.md")));
    }

    #[test]
    fn lookup_by_name() {
        assert!(builtin("pentagon").is_some());
        assert!(builtin("no_such").is_none());
        assert_eq!(positive_fixtures().count(), FIXTURES.len() - 3);
    }
}
