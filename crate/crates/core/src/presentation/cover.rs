use super::{EnumerationOutcome, GroupPresentation, PresentationError};
use crate::groups::{Perm, PermGroup};

/// Index-two kernel of the exponent-sum map mod 2, as a regular
/// permutation group on the even cosets.
#[derive(Debug, Clone)]
pub struct CoverGroup {
    pub order: usize,
    pub group: PermGroup,
}

/// Kernel of `G → Z/2`, every generator mapping to 1, inside the regular
/// action of a completed enumeration.
pub fn branched_cover_group(
    p: &GroupPresentation,
    outcome: &EnumerationOutcome,
    group_cap: usize,
) -> Result<CoverGroup, PresentationError> {
    let table = match outcome {
        EnumerationOutcome::Finite(t) => t,
        EnumerationOutcome::Inconclusive { cap } => return Err(PresentationError::Inconclusive(*cap)),
    };
    if p.generators() == 0 {
        return Err(PresentationError::NotIndexTwo("no generators".into()));
    }
    if let Some(r) = p.relators().iter().find(|r| r.len() % 2 == 1) {
        return Err(PresentationError::NotIndexTwo(format!("relator {r:?} has odd length")));
    }
    let n = table.order();
    // parity of every coset along a spanning tree, then check every edge
    let mut parity: Vec<Option<bool>> = vec![None; n];
    parity[0] = Some(false);
    let mut stack = vec![0usize];
    while let Some(c) = stack.pop() {
        let pc = parity[c].expect("visited");
        for g in 1..=p.generators() as i32 {
            for l in [g, -g] {
                let d = table.act(c, l);
                match parity[d] {
                    None => {
                        parity[d] = Some(!pc);
                        stack.push(d);
                    }
                    Some(pd) if pd == pc => {
                        return Err(PresentationError::NotIndexTwo("the mod-2 exponent map is not well defined".into()))
                    }
                    _ => {}
                }
            }
        }
    }
    let even: Vec<usize> = (0..n).filter(|&c| parity[c] == Some(false)).collect();
    if 2 * even.len() != n {
        return Err(PresentationError::NotIndexTwo(format!("{} even cosets out of {n}", even.len())));
    }
    let mut slot = vec![u32::MAX; n];
    for (i, &c) in even.iter().enumerate() {
        slot[c] = i as u32;
    }
    // Schreier generators for the transversal {1, x₁}: x₁ xᵢ and xᵢ x₁⁻¹
    let mut gens: Vec<Perm> = Vec::new();
    for g in 1..=p.generators() as i32 {
        for word in [[1, g], [g, -1]] {
            let images = even.iter().map(|&c| slot[table.act_word(c, &word)]).collect();
            let perm = Perm::new(images).expect("even elements permute the even cosets");
            if !perm.is_identity() && !gens.contains(&perm) {
                gens.push(perm);
            }
        }
    }
    if gens.is_empty() {
        gens.push(Perm::identity(even.len()));
    }
    let group = PermGroup::generate(&gens, group_cap)?;
    debug_assert_eq!(group.order(), even.len());
    Ok(CoverGroup { order: group.order(), group })
}
