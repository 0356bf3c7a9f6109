//! The bijection between pictures `κ¹ → κ²` and pairs of
//! Littlewood-Richardson crystals, as three invertible stages:
//!
//! ```text
//!        s1            s2            s3
//! P(κ¹,κ²) ──▶ S(κ¹,κ²) ──▶ W(κ¹,κ²) ──▶ ⨆_µ B(µ)^{ν¹}_{λ¹} × B(µ)^{ν²}_{λ²}
//!          ◀──          ◀──          ◀──
//!        c1            c2            c3
//! ```
//!
//! Every stage checks that its input lies in its source set (reported as
//! [`Error::Membership`]) and that its output lies in its target set
//! (reported as [`Error::Internal`], since those memberships always hold).

use serde::{Deserialize, Serialize};

use crate::crystal::{default_rank, enumerate_lr_crystal, lr_membership};
use crate::error::{Error, Result};
use crate::pictures::{enumerate_pictures, validate_picture, Picture};
use crate::rsk::{rsk_forward, rsk_inverse, validate_lex_array, TwoRowedArray};
use crate::shapes::{add_sequence, Cell, Composition, Partition, SkewShape};
use crate::tableaux::{enumerate_ssyt, SkewTableau};
use crate::Limits;

/// `κ¹ = ν¹ \ λ¹`, `κ² = ν² \ λ²` with `|κ¹| = |κ²|`.
///
/// JSON: `{"kappa1":{..},"kappa2":{..}}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawContext", into = "RawContext")]
pub struct CorrespondenceContext {
    kappa1: SkewShape,
    kappa2: SkewShape,
    rank: usize,
}

#[derive(Serialize, Deserialize)]
struct RawContext {
    kappa1: SkewShape,
    kappa2: SkewShape,
}

impl TryFrom<RawContext> for CorrespondenceContext {
    type Error = Error;

    fn try_from(raw: RawContext) -> Result<Self> {
        CorrespondenceContext::new(raw.kappa1, raw.kappa2)
    }
}

impl From<CorrespondenceContext> for RawContext {
    fn from(ctx: CorrespondenceContext) -> Self {
        RawContext { kappa1: ctx.kappa1, kappa2: ctx.kappa2 }
    }
}

/// `(T¹, T²)` of a common straight shape `µ`.
///
/// JSON: `{"first":tableau,"second":tableau}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct CrystalPair {
    first: SkewTableau,
    second: SkewTableau,
}

#[derive(Deserialize)]
struct RawPair {
    first: SkewTableau,
    second: SkewTableau,
}

impl TryFrom<RawPair> for CrystalPair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        CrystalPair::new(raw.first, raw.second)
    }
}

impl CrystalPair {
    pub fn new(first: SkewTableau, second: SkewTableau) -> Result<Self> {
        if !first.shape().is_straight() || first.shape() != second.shape() {
            return Err(Error::ShapeMismatch(format!(
                "pair needs one straight shape, got {} and {}",
                first.shape(),
                second.shape()
            )));
        }
        Ok(CrystalPair { first, second })
    }

    pub fn first(&self) -> &SkewTableau {
        &self.first
    }

    pub fn second(&self) -> &SkewTableau {
        &self.second
    }

    /// The common shape `µ`.
    pub fn shape(&self) -> &Partition {
        self.first.shape().outer()
    }
}

impl CorrespondenceContext {
    pub fn new(kappa1: SkewShape, kappa2: SkewShape) -> Result<Self> {
        if kappa1.size() != kappa2.size() {
            return Err(Error::SizeMismatch(kappa1.size(), kappa2.size()));
        }
        let rank = kappa1.rows().max(kappa2.rows()).max(1);
        Ok(CorrespondenceContext { kappa1, kappa2, rank })
    }

    pub fn kappa1(&self) -> &SkewShape {
        &self.kappa1
    }

    pub fn kappa2(&self) -> &SkewShape {
        &self.kappa2
    }

    pub fn lambda1(&self) -> &Partition {
        self.kappa1.inner()
    }

    pub fn nu1(&self) -> &Partition {
        self.kappa1.outer()
    }

    pub fn lambda2(&self) -> &Partition {
        self.kappa2.inner()
    }

    pub fn nu2(&self) -> &Partition {
        self.kappa2.outer()
    }

    /// `N = |κ¹| = |κ²|`.
    pub fn size(&self) -> usize {
        self.kappa1.size()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn check_picture(&self, f: &Picture) -> Result<()> {
        if f.domain() != &self.kappa1 || f.codomain() != &self.kappa2 {
            return Err(Error::Membership(format!(
                "picture {} -> {} does not match context {} -> {}",
                f.domain(),
                f.codomain(),
                self.kappa1,
                self.kappa2
            )));
        }
        if !validate_picture(f) {
            return Err(Error::InvalidPicture("map or its inverse is not PJ-standard".into()));
        }
        Ok(())
    }

    /// Whether `s` is a Littlewood-Richardson skew tableau for `(κ¹, κ²)`.
    pub fn in_s_set(&self, s: &SkewTableau) -> Result<bool> {
        if s.shape() != &self.kappa1 {
            return Err(Error::ShapeMismatch(format!("expected shape {}, got {}", self.kappa1, s.shape())));
        }
        if !s.is_semistandard() || !s.content().same_as(&self.kappa2.row_lengths()) {
            return Ok(false);
        }
        let add = add_sequence(self.lambda2(), &s.j_order_letters());
        Ok(add.partition().as_ref() == Some(self.nu2()))
    }

    /// Whether `w` lies in `W(κ¹, κ²)`.
    pub fn in_w_set(&self, w: &TwoRowedArray) -> bool {
        if w.len() != self.size() || !validate_lex_array(w) {
            return false;
        }
        if !content(w.top()).same_as(&self.kappa1.row_lengths())
            || !content(w.bottom()).same_as(&self.kappa2.row_lengths())
        {
            return false;
        }
        let (p, q) = rsk_forward(w).expect("lexicographic");
        self.pair_is_member(&q, &p)
    }

    fn pair_is_member(&self, first: &SkewTableau, second: &SkewTableau) -> bool {
        let member = |t: &SkewTableau, lambda: &Partition, nu: &Partition| {
            t.max_entry() <= self.rank + 1 && lr_membership(t, lambda, nu, self.rank).map(|w| w.member).unwrap_or(false)
        };
        member(first, self.lambda1(), self.nu1()) && member(second, self.lambda2(), self.nu2())
    }

    /// Whether both tableaux of `pair` lie in their crystals.
    pub fn pair_in_target(&self, pair: &CrystalPair) -> bool {
        self.pair_is_member(&pair.first, &pair.second)
    }

    /// `S_{i,j}` is the row of `f(i, j)`.
    pub fn s1(&self, f: &Picture) -> Result<SkewTableau> {
        self.check_picture(f)?;
        let rows: Vec<usize> = f.images().iter().map(|c| c.row).collect();
        let s = SkewTableau::from_j_order(self.kappa1.clone(), &rows)?;
        if !self.in_s_set(&s)? {
            return Err(Error::Internal(format!("picture produced {s:?}, outside S(κ¹,κ²)")));
        }
        Ok(s)
    }

    /// Bottom row: the middle-eastern reading of `s`; top row: the row of
    /// each letter.
    pub fn s2(&self, s: &SkewTableau) -> Result<TwoRowedArray> {
        if !self.in_s_set(s)? {
            return Err(Error::Membership(format!("{s:?} is not in S(κ¹,κ²)")));
        }
        let top = self.kappa1.j_order_cells().iter().map(|c| c.row).collect();
        let w = TwoRowedArray::new(top, s.j_order_letters())?;
        if !self.in_w_set(&w) {
            return Err(Error::Internal(format!("{w:?} is not in W(κ¹,κ²)")));
        }
        Ok(w)
    }

    /// `(T¹, T²)`: the recording and insertion tableaux of `w`.
    pub fn s3(&self, w: &TwoRowedArray) -> Result<CrystalPair> {
        if !self.in_w_set(w) {
            return Err(Error::Membership(format!("{w:?} is not in W(κ¹,κ²)")));
        }
        let (p, q) = rsk_forward(w)?;
        CrystalPair::new(q, p)
    }

    /// Reverse bumping of `T²` with `T¹` as recording tableau.
    pub fn c3(&self, pair: &CrystalPair) -> Result<TwoRowedArray> {
        if pair.shape().size() != self.size() || !self.pair_in_target(pair) {
            return Err(Error::Membership("pair is not in the product of crystals".into()));
        }
        let w = rsk_inverse(&pair.second, &pair.first)?;
        if !self.in_w_set(&w) {
            return Err(Error::Internal(format!("{w:?} is not in W(κ¹,κ²)")));
        }
        Ok(w)
    }

    /// Fills `κ¹` in `≤_J` order with the bottom row.
    pub fn c2(&self, w: &TwoRowedArray) -> Result<SkewTableau> {
        if !self.in_w_set(w) {
            return Err(Error::Membership(format!("{w:?} is not in W(κ¹,κ²)")));
        }
        let s = SkewTableau::from_j_order(self.kappa1.clone(), w.bottom())?;
        if !self.in_s_set(&s)? {
            return Err(Error::Internal(format!("{w:?} filled to {s:?}, outside S(κ¹,κ²)")));
        }
        Ok(s)
    }

    /// `f(i, j) = (S_{i,j}, λ²_{S_{i,j}} + p(S; i, j))`.
    pub fn c1(&self, s: &SkewTableau) -> Result<Picture> {
        if !self.in_s_set(s)? {
            return Err(Error::Membership(format!("{s:?} is not in S(κ¹,κ²)")));
        }
        let images = self
            .kappa1
            .j_order_cells()
            .into_iter()
            .map(|c| {
                let k = s.get(c).expect("in shape");
                Ok(Cell::new(k, self.lambda2().part(k) + s.p_index(c)?))
            })
            .collect::<Result<Vec<_>>>()?;
        let f = Picture::new(self.kappa1.clone(), self.kappa2.clone(), images)
            .map_err(|e| Error::Internal(format!("c1 image is not a bijection: {e}")))?;
        if !validate_picture(&f) {
            return Err(Error::Internal(format!("c1 produced a non-picture {f:?}")));
        }
        Ok(f)
    }

    /// `s3 ∘ s2 ∘ s1`.
    pub fn full_s(&self, f: &Picture) -> Result<CrystalPair> {
        let s = self.s1(f)?;
        let w = self.s2(&s).map_err(internal)?;
        self.s3(&w).map_err(internal)
    }

    /// `c1 ∘ c2 ∘ c3`.
    pub fn full_c(&self, pair: &CrystalPair) -> Result<Picture> {
        let w = self.c3(pair)?;
        let s = self.c2(&w).map_err(internal)?;
        self.c1(&s).map_err(internal)
    }

    /// `P(κ¹, κ²)`.
    pub fn pictures(&self, limits: &Limits) -> Result<Vec<Picture>> {
        enumerate_pictures(&self.kappa1, &self.kappa2, limits.picture_cells)
    }

    /// `S(κ¹, κ²)`, by filtering all fillings of `κ¹`.
    pub fn s_set(&self, limits: &Limits) -> Result<Vec<SkewTableau>> {
        let max_entry = self.kappa2.rows().max(1);
        let mut out = Vec::new();
        for s in enumerate_ssyt(&self.kappa1, max_entry, limits.tableau_cells)? {
            if self.in_s_set(&s)? {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// `⨆_µ B(µ)^{ν¹}_{λ¹} × B(µ)^{ν²}_{λ²}`, grouped by `µ`.
    pub fn crystal_pairs(&self, limits: &Limits) -> Result<Vec<CrystalPair>> {
        let mut out = Vec::new();
        for mu in Partition::all_of_size(self.size()) {
            let firsts = enumerate_lr_crystal(&mu, self.lambda1(), self.nu1(), self.rank, limits.tableau_cells)?;
            if firsts.is_empty() {
                continue;
            }
            let seconds = enumerate_lr_crystal(&mu, self.lambda2(), self.nu2(), self.rank, limits.tableau_cells)?;
            for t1 in &firsts {
                for t2 in &seconds {
                    out.push(CrystalPair { first: t1.clone(), second: t2.clone() });
                }
            }
        }
        Ok(out)
    }

    /// `Σ_µ |B(µ)^{ν¹}_{λ¹}| · |B(µ)^{ν²}_{λ²}|`.
    pub fn crystal_pair_count(&self, limits: &Limits) -> Result<usize> {
        let mut total = 0;
        for mu in Partition::all_of_size(self.size()) {
            let a = enumerate_lr_crystal(&mu, self.lambda1(), self.nu1(), self.rank, limits.tableau_cells)?.len();
            if a > 0 {
                let b = enumerate_lr_crystal(&mu, self.lambda2(), self.nu2(), self.rank, limits.tableau_cells)?.len();
                total += a * b;
            }
        }
        Ok(total)
    }
}

fn internal(e: Error) -> Error {
    match e {
        Error::Internal(_) => e,
        other => Error::Internal(other.to_string()),
    }
}

fn content(letters: &[usize]) -> Composition {
    let mut counts = vec![0; letters.iter().copied().max().unwrap_or(0)];
    for &x in letters {
        counts[x - 1] += 1;
    }
    Composition(counts)
}

/// `c^ν_{λµ}`, optionally with the per-route counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LrCount {
    pub coefficient: usize,
    /// `|B(µ)^ν_λ|`, `|P(µ, ν∖λ)|` and the number of LR skew tableaux of
    /// shape `ν∖λ` and content `µ`, when cross-checked.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub routes: Option<[usize; 3]>,
}

/// The Littlewood-Richardson coefficient as the size of `B(µ)^ν_λ`. With
/// `cross_check`, also counts pictures `µ → ν∖λ` and LR skew tableaux of
/// shape `ν∖λ` and content `µ`, failing if the three disagree.
pub fn lr_coefficient(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    cross_check: bool,
    limits: &Limits,
) -> Result<LrCount> {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) {
        return Ok(LrCount { coefficient: 0, routes: cross_check.then_some([0, 0, 0]) });
    }
    let rank = default_rank(lambda, mu, nu);
    let crystal = enumerate_lr_crystal(mu, lambda, nu, rank, limits.tableau_cells)?.len();
    if !cross_check {
        return Ok(LrCount { coefficient: crystal, routes: None });
    }
    let straight = SkewShape::straight(mu.clone());
    let skew = SkewShape::new(nu.clone(), lambda.clone())?;
    let pictures = enumerate_pictures(&straight, &skew, limits.picture_cells)?.len();
    let tableaux = CorrespondenceContext::new(skew, straight)?.s_set(limits)?.len();
    if crystal != pictures || crystal != tableaux {
        return Err(Error::Internal(format!(
            "routes disagree for λ={lambda} µ={mu} ν={nu}: crystal {crystal}, pictures {pictures}, tableaux {tableaux}"
        )));
    }
    Ok(LrCount { coefficient: crystal, routes: Some([crystal, pictures, tableaux]) })
}
