//! Standard permutation representations of small groups.

use super::group::{Limits, PermGroup};
use super::permutation::Permutation;
use crate::error::GroupError;

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let c: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[c]).expect("valid cycle")
}

/// Cyclic group of order `n` acting regularly on `n` points.
pub fn cyclic(n: usize, limits: Limits) -> Result<PermGroup, GroupError> {
    let gens = if n > 1 { vec![cycle(n, 0..n)] } else { vec![] };
    Ok(PermGroup::with_limits(n.max(1), &gens, limits)?.named(format!("C{n}")))
}

/// Dihedral group of order `2n` on the vertices of an `n`-gon, `n >= 3`.
pub fn dihedral(n: usize, limits: Limits) -> Result<PermGroup, GroupError> {
    if n < 3 {
        return Err(GroupError::NotBijective {
            degree: n,
            reason: "dihedral groups need at least 3 points".into(),
        });
    }
    let rotation = cycle(n, 0..n);
    let reflection = Permutation::new((0..n).map(|i| (n - i) % n).collect())?;
    Ok(PermGroup::with_limits(n, &[rotation, reflection], limits)?.named(format!("D{}", 2 * n)))
}

pub fn symmetric(n: usize, limits: Limits) -> Result<PermGroup, GroupError> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, 0..n));
        gens.push(cycle(n, [0, 1]));
    }
    Ok(PermGroup::with_limits(n.max(1), &gens, limits)?.named(format!("S{n}")))
}

pub fn alternating(n: usize, limits: Limits) -> Result<PermGroup, GroupError> {
    let gens: Vec<Permutation> = (2..n).map(|k| cycle(n, [0, 1, k])).collect();
    Ok(PermGroup::with_limits(n.max(1), &gens, limits)?.named(format!("A{n}")))
}

/// Quaternion group of order 8 in its regular representation.
pub fn quaternion(limits: Limits) -> Result<PermGroup, GroupError> {
    let i = Permutation::from_cycles(8, &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]])?;
    let j = Permutation::from_cycles(8, &[vec![0, 4, 2, 6], vec![1, 7, 3, 5]])?;
    Ok(PermGroup::with_limits(8, &[i, j], limits)?.named("Q8"))
}

/// SL(2,3) acting on the eight nonzero vectors of the plane over GF(3).
pub fn sl2_3(limits: Limits) -> Result<PermGroup, GroupError> {
    let vectors: Vec<(u8, u8)> = (0..3)
        .flat_map(|a| (0..3).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect();
    let act = |m: [[u8; 2]; 2]| -> Permutation {
        let images = vectors
            .iter()
            .map(|&(x, y)| {
                let img = ((m[0][0] * x + m[0][1] * y) % 3, (m[1][0] * x + m[1][1] * y) % 3);
                vectors.iter().position(|&v| v == img).expect("nonzero image")
            })
            .collect();
        Permutation::new(images).expect("invertible matrix")
    };
    let gens = [act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])];
    Ok(PermGroup::with_limits(8, &gens, limits)?.named("SL(2,3)"))
}

/// Elementary abelian group of order `p^k` as `k` disjoint `p`-cycles.
pub fn elementary_abelian(p: usize, k: usize, limits: Limits) -> Result<PermGroup, GroupError> {
    let degree = (p * k).max(1);
    let gens: Vec<Permutation> = (0..k).map(|i| cycle(degree, i * p..(i + 1) * p)).collect();
    Ok(PermGroup::with_limits(degree, &gens, limits)?.named(format!("C{p}^{k}")))
}

/// Direct product acting on the disjoint union of the factors' points.
pub fn direct_product(factors: &[PermGroup], limits: Limits) -> Result<PermGroup, GroupError> {
    let degree: usize = factors.iter().map(PermGroup::degree).sum();
    let mut gens = Vec::new();
    let mut offset = 0;
    for f in factors {
        for g in f.generators() {
            let mut images: Vec<usize> = (0..degree).collect();
            for (i, &x) in g.images().iter().enumerate() {
                images[offset + i] = offset + x;
            }
            gens.push(Permutation::new(images)?);
        }
        offset += f.degree();
    }
    let label = factors.iter().map(PermGroup::label).collect::<Vec<_>>().join("x");
    Ok(PermGroup::with_limits(degree.max(1), &gens, limits)?.named(label))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let l = Limits::default();
        assert_eq!(cyclic(1, l).unwrap().order(), 1);
        assert_eq!(cyclic(6, l).unwrap().order(), 6);
        assert_eq!(dihedral(4, l).unwrap().order(), 8);
        assert_eq!(symmetric(4, l).unwrap().order(), 24);
        assert_eq!(alternating(5, l).unwrap().order(), 60);
        assert_eq!(alternating(2, l).unwrap().order(), 1);
        assert_eq!(quaternion(l).unwrap().order(), 8);
        assert_eq!(sl2_3(l).unwrap().order(), 24);
        assert_eq!(elementary_abelian(2, 3, l).unwrap().order(), 8);
        let s4 = symmetric(4, l).unwrap();
        let c5 = cyclic(5, l).unwrap();
        let p = direct_product(&[s4, c5], l).unwrap();
        assert_eq!(p.order(), 120);
        assert_eq!(p.label(), "S4xC5");
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = quaternion(Limits::default()).unwrap();
        let involutions = (1..q.order()).filter(|&x| q.mul(x, x) == PermGroup::IDENTITY).count();
        assert_eq!(involutions, 1);
        assert!(!q.is_abelian());
    }
}
