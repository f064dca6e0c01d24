use std::sync::Arc;

use crate::error::{Error, Result};

use super::{closure, Elem, FiniteGroup, Subgroup};

/// Extends images of `source`'s generators to a homomorphism `source -> target`.
///
/// Images are propagated along the minimal-word tree and every edge
/// `x -> x * s` is then checked, so success means the map is a homomorphism.
pub fn extend_generator_images(
    source: &FiniteGroup,
    target: &FiniteGroup,
    gen_images: &[Elem],
) -> Result<Vec<Elem>> {
    let k = source.generators().len();
    if gen_images.len() != k {
        return Err(Error::InvalidParameter(format!(
            "expected {k} generator images, got {}",
            gen_images.len()
        )));
    }
    for &y in gen_images {
        target.check(y)?;
    }
    let letter_images: Vec<Elem> = gen_images
        .iter()
        .flat_map(|&y| [y, target.inv(y)])
        .collect();
    let mut images = vec![0; source.order()];
    for x in source.bfs_order().skip(1) {
        let (p, l) = source.tree_edge(x);
        images[x] = target.mul(images[p], letter_images[l]);
    }
    for x in source.elements() {
        for (i, &s) in gen_images.iter().enumerate() {
            let xs = source.letter_action(2 * i)[x] as usize;
            if images[xs] != target.mul(images[x], s) {
                return Err(Error::ExtensionFailed(format!(
                    "image of {} * generator {} disagrees",
                    source.word_string(x),
                    super::generator_name(i)
                )));
            }
        }
    }
    Ok(images)
}

/// A verified homomorphism between two concrete groups.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    images: Vec<Elem>,
}

impl GroupHom {
    /// Checks `images[x*y] = images[x]*images[y]` on generators before accepting.
    pub fn new(source: Arc<FiniteGroup>, target: Arc<FiniteGroup>, images: Vec<Elem>) -> Result<Self> {
        if images.len() != source.order() {
            return Err(Error::InvalidParameter("image table has wrong length".into()));
        }
        let gen_images: Vec<Elem> = source.generators().iter().map(|&g| images[g]).collect();
        let extended = extend_generator_images(&source, &target, &gen_images)?;
        if extended != images {
            return Err(Error::ExtensionFailed("image table is not multiplicative".into()));
        }
        Ok(GroupHom { source, target, images })
    }

    pub fn from_generator_images(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        gen_images: &[Elem],
    ) -> Result<Self> {
        let images = extend_generator_images(&source, &target, gen_images)?;
        Ok(GroupHom { source, target, images })
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    pub fn apply(&self, x: Elem) -> Elem {
        self.images[x]
    }

    pub fn images(&self) -> &[Elem] {
        &self.images
    }

    pub fn kernel(&self) -> Subgroup {
        let ker: Vec<Elem> = self.source.elements().filter(|&x| self.images[x] == 0).collect();
        Subgroup::from_sorted_unchecked(self.source.order(), ker)
    }

    pub fn image(&self) -> Subgroup {
        let gens: Vec<Elem> = self.source.generators().iter().map(|&g| self.images[g]).collect();
        closure(&self.target, &gens)
    }

    pub fn is_surjective(&self) -> bool {
        self.image().is_whole()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic, dihedral};

    #[test]
    fn extension_detects_non_homomorphism() {
        let c4 = cyclic(4).unwrap();
        let c2 = cyclic(2).unwrap();
        // generator -> generator is fine from C4 to C2
        assert!(extend_generator_images(&c4, &c2, &[1]).is_ok());
        // but not from C2 to C4 when the image has order 4
        assert!(extend_generator_images(&c2, &c4, &[1]).is_err());
        assert!(extend_generator_images(&c2, &c4, &[2]).is_ok());
    }

    #[test]
    fn kernel_and_image() {
        let d8 = Arc::new(dihedral(8).unwrap());
        let c2 = Arc::new(cyclic(2).unwrap());
        // reflection parity
        let h = GroupHom::from_generator_images(d8.clone(), c2, &[0, 1]).unwrap();
        assert_eq!(h.kernel().order(), 4);
        assert!(h.is_surjective());
        assert!(!h.is_injective());
    }
}
