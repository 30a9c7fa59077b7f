//! Fitting classes: membership, radicals, residuals and Hartley functions.

mod eval;
mod expr;
mod hfunction;

pub(crate) use eval::{Eval, Node};
pub use expr::ClassExpr;
pub(crate) use expr::Parser;
pub use hfunction::{h_radical, hartley_member, hfun_predicates, HFunction, HPredicates};

use crate::error::{ClassError, GroupError};
use crate::perm::{PermGroup, Subgroup};

/// Whether `g` belongs to the class.
pub fn member(g: &PermGroup, class: &ClassExpr) -> Result<bool, ClassError> {
    let node = Node::compile(class);
    if node.order_determined() {
        return Ok(node.member_by_order(g.order() as u64));
    }
    let lat = g.lattice()?;
    Ok(Eval::new(lat).member_sub(lat.whole(), &node))
}

/// Whether the subgroup `h`, regarded as a group, belongs to the class.
pub fn member_subgroup(h: &Subgroup, class: &ClassExpr) -> Result<bool, ClassError> {
    let node = Node::compile(class);
    if node.order_determined() {
        return Ok(node.member_by_order(h.order() as u64));
    }
    let lat = h.parent().lattice()?;
    Ok(Eval::new(lat).member_sub(lat.id_of(h)?, &node))
}

/// Whether the section `top / bottom` belongs to the class; `bottom` must be
/// normal in `top`.
pub fn member_section(top: &Subgroup, bottom: &Subgroup, class: &ClassExpr) -> Result<bool, ClassError> {
    top.check_parent(bottom)?;
    let lat = top.parent().lattice()?;
    let (t, b) = (lat.id_of(top)?, lat.id_of(bottom)?);
    if !lat.is_normal_in(b, t) {
        return Err(GroupError::NotNormal.into());
    }
    Ok(Eval::new(lat).member(t, b, &Node::compile(class)))
}

/// The largest normal subgroup of `g` belonging to the class.
pub fn radical(g: &PermGroup, class: &ClassExpr) -> Result<Subgroup, ClassError> {
    radical_of(&g.whole(), class)
}

/// The radical of `h` regarded as a group, as a subgroup of `h`.
pub fn radical_of(h: &Subgroup, class: &ClassExpr) -> Result<Subgroup, ClassError> {
    let lat = h.parent().lattice()?;
    let top = lat.id_of(h)?;
    let r = Eval::new(lat).radical(top, lat.trivial(), &Node::compile(class));
    Ok(lat.subgroup(r))
}

/// The smallest normal subgroup of `g` with quotient in the class.
///
/// Only classes closed under quotients and subdirect products are accepted:
/// the atoms other than products and Hartley classes, and meets of them.
pub fn residual(g: &PermGroup, class: &ClassExpr) -> Result<Subgroup, ClassError> {
    residual_of(&g.whole(), class)
}

pub fn residual_of(h: &Subgroup, class: &ClassExpr) -> Result<Subgroup, ClassError> {
    let node = Node::compile(class);
    if !node.residual_supported() {
        return Err(ClassError::UnsupportedResidual(class.to_string()));
    }
    let lat = h.parent().lattice()?;
    let top = lat.id_of(h)?;
    Ok(lat.subgroup(Eval::new(lat).residual(top, &node)))
}

/// Orders of the composition factors of `g`, from the top of a composition
/// series down.
pub fn composition_factor_orders(g: &PermGroup) -> Result<Vec<u64>, ClassError> {
    let lat = g.lattice()?;
    Ok(Eval::new(lat).composition_factors(lat.whole(), lat.trivial()))
}
