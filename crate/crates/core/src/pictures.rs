//! Pictures: bijections between skew diagrams that are PJ-standard in
//! both directions.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{leq_j, leq_p, Cell, SkewShape};

/// Default cap on `|κ|` for exhaustive picture enumeration.
pub const DEFAULT_MAX_CELLS: usize = 8;

/// A bijection `domain → codomain`, stored as the images of the domain's
/// cells in `≤_J` order.
///
/// JSON: `{"domain":{..},"codomain":{..},"pairs":[[[i,j],[a,b]],..]}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPicture", into = "RawPicture")]
pub struct Picture {
    domain: SkewShape,
    codomain: SkewShape,
    images: Vec<Cell>,
}

#[derive(Serialize, Deserialize)]
struct RawPicture {
    domain: SkewShape,
    codomain: SkewShape,
    pairs: Vec<(Cell, Cell)>,
}

impl TryFrom<RawPicture> for Picture {
    type Error = Error;

    fn try_from(raw: RawPicture) -> Result<Self> {
        let cells = raw.domain.j_order_cells();
        let mut images = Vec::with_capacity(cells.len());
        for &c in &cells {
            let image = raw
                .pairs
                .iter()
                .find(|(d, _)| *d == c)
                .map(|&(_, img)| img)
                .ok_or_else(|| Error::InvalidPicture(format!("no image for {c}")))?;
            images.push(image);
        }
        if raw.pairs.len() != cells.len() {
            return Err(Error::InvalidPicture("pairs do not match the domain cells".into()));
        }
        Picture::new(raw.domain, raw.codomain, images)
    }
}

impl From<Picture> for RawPicture {
    fn from(p: Picture) -> Self {
        let pairs = p.domain.j_order_cells().into_iter().zip(p.images).collect();
        RawPicture { domain: p.domain, codomain: p.codomain, pairs }
    }
}

impl Picture {
    /// Checks that `images` is a bijection onto the codomain; PJ-standardness
    /// is left to [`validate_picture`].
    pub fn new(domain: SkewShape, codomain: SkewShape, images: Vec<Cell>) -> Result<Self> {
        if domain.size() != codomain.size() || images.len() != domain.size() {
            return Err(Error::SizeMismatch(domain.size(), codomain.size()));
        }
        let mut seen = images.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != images.len() || !images.iter().all(|&c| codomain.contains(c)) {
            return Err(Error::InvalidPicture("map is not a bijection onto the codomain".into()));
        }
        Ok(Picture { domain, codomain, images })
    }

    pub fn domain(&self) -> &SkewShape {
        &self.domain
    }

    pub fn codomain(&self) -> &SkewShape {
        &self.codomain
    }

    /// Images aligned with `domain().j_order_cells()`.
    pub fn images(&self) -> &[Cell] {
        &self.images
    }

    pub fn pairs(&self) -> impl Iterator<Item = (Cell, Cell)> + '_ {
        self.domain.j_order_cells().into_iter().zip(self.images.iter().copied())
    }

    pub fn image(&self, c: Cell) -> Option<Cell> {
        self.pairs().find(|&(d, _)| d == c).map(|(_, img)| img)
    }

    pub fn inverse(&self) -> Picture {
        let images = self
            .codomain
            .j_order_cells()
            .into_iter()
            .map(|c| self.pairs().find(|&(_, img)| img == c).expect("bijection").0)
            .collect();
        Picture { domain: self.codomain.clone(), codomain: self.domain.clone(), images }
    }
}

/// `c ≤_P c'` implies `f(c) ≤_J f(c')` for every pair.
pub fn is_pj_standard(cells: &[Cell], images: &[Cell]) -> bool {
    debug_assert_eq!(cells.len(), images.len());
    cells.iter().zip(images).all(|(&a, &fa)| cells.iter().zip(images).all(|(&b, &fb)| !leq_p(a, b) || leq_j(fa, fb)))
}

/// Bijective, and both the map and its inverse are PJ-standard.
pub fn validate_picture(p: &Picture) -> bool {
    let cells = p.domain.j_order_cells();
    if Picture::new(p.domain.clone(), p.codomain.clone(), p.images.clone()).is_err() {
        return false;
    }
    is_pj_standard(&cells, &p.images) && is_pj_standard(&p.images, &cells)
}

/// Every picture `κ¹ → κ²`, by backtracking over images in the domain's
/// `≤_J` order. Output is ordered lexicographically by the codomain
/// `≤_J` positions of the images.
pub fn enumerate_pictures(kappa1: &SkewShape, kappa2: &SkewShape, max_cells: usize) -> Result<Vec<Picture>> {
    if kappa1.size() != kappa2.size() {
        return Err(Error::SizeMismatch(kappa1.size(), kappa2.size()));
    }
    if kappa1.size() > max_cells {
        return Err(Error::BoundExceeded { size: kappa1.size(), bound: max_cells });
    }
    let domain = kappa1.j_order_cells();
    let codomain = kappa2.j_order_cells();
    let mut out = Vec::new();
    let mut images = Vec::with_capacity(domain.len());
    let mut used = vec![false; codomain.len()];
    search(&domain, &codomain, &mut images, &mut used, &mut |images| {
        out.push(Picture { domain: kappa1.clone(), codomain: kappa2.clone(), images: images.to_vec() });
    });
    debug_assert!(out.iter().all(validate_picture));
    Ok(out)
}

fn search(
    domain: &[Cell],
    codomain: &[Cell],
    images: &mut Vec<Cell>,
    used: &mut [bool],
    emit: &mut dyn FnMut(&[Cell]),
) {
    let t = images.len();
    if t == domain.len() {
        emit(images);
        return;
    }
    let d = domain[t];
    for (slot, &c) in codomain.iter().enumerate() {
        if used[slot] {
            continue;
        }
        let consistent = domain[..t].iter().zip(images.iter()).all(|(&e, &fe)| {
            (!leq_p(e, d) || leq_j(fe, c))
                && (!leq_p(d, e) || leq_j(c, fe))
                && (!leq_p(fe, c) || leq_j(e, d))
                && (!leq_p(c, fe) || leq_j(d, e))
        });
        if !consistent {
            continue;
        }
        used[slot] = true;
        images.push(c);
        search(domain, codomain, images, used, emit);
        images.pop();
        used[slot] = false;
    }
}
