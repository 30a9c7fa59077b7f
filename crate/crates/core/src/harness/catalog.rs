use std::fmt;
use std::path::{Path, PathBuf};

use crate::error::HarnessError;
use crate::perm::families::*;
use crate::perm::{read_group_file, Limits, PermGroup};

/// How a catalog group is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Cyclic(usize),
    /// Dihedral group on `n` points, of order `2n`.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion,
    Sl23,
    ElementaryAbelian(usize, usize),
    Product(Vec<Recipe>),
    File(PathBuf),
}

impl Recipe {
    pub fn build(&self, limits: Limits) -> Result<PermGroup, HarnessError> {
        Ok(match self {
            Recipe::Cyclic(n) => cyclic(*n, limits)?,
            Recipe::Dihedral(n) => dihedral(*n, limits)?,
            Recipe::Symmetric(n) => symmetric(*n, limits)?,
            Recipe::Alternating(n) => alternating(*n, limits)?,
            Recipe::Quaternion => quaternion(limits)?,
            Recipe::Sl23 => sl2_3(limits)?,
            Recipe::ElementaryAbelian(p, k) => elementary_abelian(*p, *k, limits)?,
            Recipe::Product(parts) => {
                let groups = parts.iter().map(|r| r.build(limits)).collect::<Result<Vec<_>, _>>()?;
                direct_product(&groups, limits)?
            }
            Recipe::File(path) => read_group_file(path, limits)?,
        })
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Cyclic(n) => write!(f, "cyclic {n}"),
            Recipe::Dihedral(n) => write!(f, "dihedral on {n} points"),
            Recipe::Symmetric(n) => write!(f, "symmetric {n}"),
            Recipe::Alternating(n) => write!(f, "alternating {n}"),
            Recipe::Quaternion => f.write_str("quaternion"),
            Recipe::Sl23 => f.write_str("SL(2,3)"),
            Recipe::ElementaryAbelian(p, k) => write!(f, "elementary abelian {p}^{k}"),
            Recipe::Product(parts) => {
                f.write_str("product of ")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "({p})")?;
                }
                Ok(())
            }
            Recipe::File(path) => write!(f, "file {}", path.display()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: String,
    pub recipe: Recipe,
    pub expected_order: usize,
}

/// Catalog groups in a fixed order, each built once so that subgroup
/// lattices are shared between suites.
#[derive(Clone)]
pub struct Catalog {
    entries: Vec<(CatalogEntry, PermGroup)>,
    limits: Limits,
}

fn entry(label: &str, recipe: Recipe, expected_order: usize) -> CatalogEntry {
    CatalogEntry {
        label: label.to_string(),
        recipe,
        expected_order,
    }
}

/// The built-in catalog, ascending by order.
pub fn builtin_entries() -> Vec<CatalogEntry> {
    use Recipe::*;
    let s3 = || Symmetric(3);
    let s4 = || Symmetric(4);
    let a4 = || Alternating(4);
    let a5 = || Alternating(5);
    vec![
        entry("C1", Cyclic(1), 1),
        entry("C2", Cyclic(2), 2),
        entry("C3", Cyclic(3), 3),
        entry("C4", Cyclic(4), 4),
        entry("C2^2", ElementaryAbelian(2, 2), 4),
        entry("C5", Cyclic(5), 5),
        entry("C6", Cyclic(6), 6),
        entry("S3", s3(), 6),
        entry("C2^3", ElementaryAbelian(2, 3), 8),
        entry("D8", Dihedral(4), 8),
        entry("Q8", Quaternion, 8),
        entry("C3^2", ElementaryAbelian(3, 2), 9),
        entry("D10", Dihedral(5), 10),
        entry("D12", Dihedral(6), 12),
        entry("A4", a4(), 12),
        entry("C3xS3", Product(vec![Cyclic(3), s3()]), 18),
        entry("D8xC3", Product(vec![Dihedral(4), Cyclic(3)]), 24),
        entry("Q8xC3", Product(vec![Quaternion, Cyclic(3)]), 24),
        entry("S4", s4(), 24),
        entry("SL(2,3)", Sl23, 24),
        entry("A4xC2", Product(vec![a4(), Cyclic(2)]), 24),
        entry("S3xS3", Product(vec![s3(), s3()]), 36),
        entry("S4xC2", Product(vec![s4(), Cyclic(2)]), 48),
        entry("A5", a5(), 60),
        entry("S4xC5", Product(vec![s4(), Cyclic(5)]), 120),
        entry("S5", Symmetric(5), 120),
        entry("A5xC2", Product(vec![a5(), Cyclic(2)]), 120),
        entry("A5xC7", Product(vec![a5(), Cyclic(7)]), 420),
    ]
}

impl Catalog {
    pub fn from_entries(entries: Vec<CatalogEntry>, limits: Limits) -> Result<Self, HarnessError> {
        let mut catalog = Catalog {
            entries: Vec::new(),
            limits,
        };
        for e in entries {
            catalog.push(e)?;
        }
        Ok(catalog)
    }

    pub fn builtin(limits: Limits) -> Result<Self, HarnessError> {
        Self::from_entries(builtin_entries(), limits)
    }

    pub fn empty(limits: Limits) -> Self {
        Catalog {
            entries: Vec::new(),
            limits,
        }
    }

    fn push(&mut self, e: CatalogEntry) -> Result<&PermGroup, HarnessError> {
        if self.get(&e.label).is_some() {
            return Err(HarnessError::DuplicateLabel(e.label));
        }
        let group = e.recipe.build(self.limits)?.named(&e.label);
        if group.order() != e.expected_order {
            return Err(HarnessError::OrderMismatch {
                label: e.label,
                expected: e.expected_order,
                found: group.order(),
            });
        }
        self.entries.push((e, group));
        Ok(&self.entries.last().expect("just pushed").1)
    }

    /// Reads a group file and appends it under the label it declares, or the
    /// file stem.
    pub fn ingest(&mut self, path: &Path) -> Result<&PermGroup, HarnessError> {
        let group = read_group_file(path, self.limits)?;
        let e = entry(group.label(), Recipe::File(path.to_path_buf()), group.order());
        if self.get(&e.label).is_some() {
            return Err(HarnessError::DuplicateLabel(e.label));
        }
        self.entries.push((e, group));
        Ok(&self.entries.last().expect("just pushed").1)
    }

    pub fn get(&self, label: &str) -> Option<&PermGroup> {
        self.entries.iter().find(|(e, _)| e.label == label).map(|(_, g)| g)
    }

    pub fn require(&self, label: &str) -> Result<&PermGroup, HarnessError> {
        self.get(label)
            .ok_or_else(|| HarnessError::UnknownGroup(label.to_string()))
    }

    pub fn entries(&self) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().map(|(e, _)| e)
    }

    pub fn groups(&self) -> impl Iterator<Item = &PermGroup> {
        self.entries.iter().map(|(_, g)| g)
    }

    /// Groups of order at most `max_order`, in catalog order.
    pub fn up_to(&self, max_order: usize) -> Vec<PermGroup> {
        self.groups().filter(|g| g.order() <= max_order).cloned().collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }
}
