//! Named invariant suites, run exhaustively over bounded families (plus one
//! seeded random suite). Each suite reports how many instances it checked
//! and the first counterexample it found.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::correspondence::{lr_coefficient, CorrespondenceContext};
use crate::crystal::{equivalence_class, insertion_key, CrystalOp, EquivMode, TensorWord};
use crate::error::{Error, Result};
use crate::pictures::enumerate_pictures;
use crate::rsk::{column_insert, insert_word, insert_word_tracking, rsk_forward, rsk_inverse, TwoRowedArray};
use crate::shapes::{add_sequence, Partition, SkewShape};
use crate::tableaux::{enumerate_ssyt, highest_tableau, SkewTableau};
use crate::Limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Roundtrip,
    Cardinality,
    RskBijection,
    BumpingLemma,
    KnuthCrystal,
    LrHighest,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Roundtrip,
        Suite::Cardinality,
        Suite::RskBijection,
        Suite::BumpingLemma,
        Suite::KnuthCrystal,
        Suite::LrHighest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Roundtrip => "roundtrip",
            Suite::Cardinality => "cardinality",
            Suite::RskBijection => "rsk-bijection",
            Suite::BumpingLemma => "bumping-lemma",
            Suite::KnuthCrystal => "knuth-crystal",
            Suite::LrHighest => "lr-highest",
        }
    }

    /// A suite name, or `"all"` for every suite in order.
    pub fn parse_selection(name: &str) -> Result<Vec<Suite>> {
        if name == "all" {
            Ok(Suite::ALL.to_vec())
        } else {
            name.parse().map(|s| vec![s])
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|suite| suite.name() == s).ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Size limits of the checked families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Bounds {
    /// Outer shapes `ν` have at most this many cells...
    pub outer_cells: usize,
    /// ...and fit in a `box_rows × box_cols` box.
    pub box_rows: usize,
    pub box_cols: usize,
    /// Largest skew shape `|ν∖λ|`.
    pub skew_cells: usize,
    pub random_instances: usize,
    /// Largest random tableau for the bumping suite.
    pub random_cells: usize,
    pub random_entry: usize,
    /// Words for the Knuth/crystal suite have length `≤ word_len` over
    /// `1..=word_letters`; tableaux have at most `word_len` cells.
    pub word_len: usize,
    pub word_letters: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            outer_cells: 6,
            box_rows: 4,
            box_cols: 4,
            skew_cells: 5,
            random_instances: 10_000,
            random_cells: 12,
            random_entry: 5,
            word_len: 5,
            word_letters: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    /// Instances checked, per property.
    pub instances: BTreeMap<&'static str, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

struct Checker {
    report: SuiteReport,
}

impl Checker {
    fn new(suite: Suite) -> Self {
        Checker { report: SuiteReport { suite, instances: BTreeMap::new(), counterexample: None } }
    }

    fn count(&mut self, what: &'static str) {
        *self.report.instances.entry(what).or_default() += 1;
    }

    fn check(&mut self, what: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        self.count(what);
        if !ok && self.report.counterexample.is_none() {
            self.report.counterexample = Some(format!("{what}: {}", detail()));
        }
    }

    fn finish(self) -> SuiteReport {
        self.report
    }
}

/// Runs `suite` and returns its report. Errors are reserved for bad bounds;
/// a failing stage counts as a counterexample.
pub fn run_suite(suite: Suite, bounds: &Bounds, seed: u64, limits: &Limits) -> Result<SuiteReport> {
    match suite {
        Suite::Roundtrip => roundtrip(bounds, limits),
        Suite::Cardinality => cardinality(bounds, limits),
        Suite::RskBijection => rsk_bijection(limits),
        Suite::BumpingLemma => Ok(bumping_lemma(bounds, seed)),
        Suite::KnuthCrystal => knuth_crystal(bounds, limits),
        Suite::LrHighest => lr_highest(limits),
    }
}

/// Every `ν∖λ` with `ν` in the bounded box and `|ν∖λ| ≤ skew_cells`.
pub fn skew_family(bounds: &Bounds) -> Vec<SkewShape> {
    let mut out = Vec::new();
    for nu in Partition::all_in_box(bounds.box_rows, bounds.box_cols, bounds.outer_cells) {
        for lambda in nu.subpartitions() {
            let kappa = SkewShape::new(nu.clone(), lambda).expect("subpartition is nested");
            if kappa.size() <= bounds.skew_cells {
                out.push(kappa);
            }
        }
    }
    out
}

/// Every context `(κ¹, κ²)` over [`skew_family`] with `|κ¹| = |κ²|`.
pub fn context_family(bounds: &Bounds) -> Vec<CorrespondenceContext> {
    let shapes = skew_family(bounds);
    let mut out = Vec::new();
    for k1 in &shapes {
        for k2 in shapes.iter().filter(|k2| k2.size() == k1.size()) {
            out.push(CorrespondenceContext::new(k1.clone(), k2.clone()).expect("equal sizes"));
        }
    }
    out
}

fn roundtrip(bounds: &Bounds, limits: &Limits) -> Result<SuiteReport> {
    let mut ck = Checker::new(Suite::Roundtrip);
    let mut classes: HashMap<Vec<usize>, BTreeSet<Vec<usize>>> = HashMap::new();
    for cx in context_family(bounds) {
        ck.count("contexts");
        for f in cx.pictures(limits)? {
            let stages = (|| {
                let s = cx.s1(&f)?;
                let w = cx.s2(&s)?;
                let pair = cx.s3(&w)?;
                let ok = cx.c3(&pair)? == w && cx.c2(&w)? == s && cx.c1(&s)? == f;
                Ok::<_, Error>((ok, s, pair))
            })();
            let (s, pair) = match stages {
                Ok((ok, s, pair)) => {
                    ck.check("stages", ok, || format!("stage round trip fails on {f:?}"));
                    (s, pair)
                }
                Err(e) => {
                    ck.check("stages", false, || format!("{e} on {f:?}"));
                    continue;
                }
            };
            let back = cx.full_c(&pair);
            ck.check("pictures", back.as_ref() == Ok(&f), || format!("{f:?} came back as {back:?}"));

            let target = pair.second().j_order_letters();
            let class = match classes.get(&target) {
                Some(c) => c,
                None => {
                    let c = equivalence_class(&target, EquivMode::Crystal, limits.bfs_len)?;
                    classes.entry(target.clone()).or_insert(c)
                }
            };
            let source = s.j_order_letters();
            ck.check("crystal-equivalence", class.contains(&source), || {
                format!("reading {source:?} is not crystal equivalent to {target:?}")
            });
        }
        for pair in cx.crystal_pairs(limits)? {
            let back = cx.full_c(&pair).and_then(|f| cx.full_s(&f));
            ck.check("pairs", back.as_ref() == Ok(&pair), || format!("{pair:?} came back as {back:?}"));
        }
    }
    Ok(ck.finish())
}

/// `δ_n ∖ δ_{n-1}` for the staircase `δ_n = (n, n-1, …, 1)`.
pub fn disconnected_boxes(n: usize) -> SkewShape {
    let staircase = |m: usize| Partition::new((1..=m).rev().collect()).expect("decreasing");
    SkewShape::new(staircase(n), staircase(n.saturating_sub(1))).expect("nested")
}

fn cardinality(bounds: &Bounds, limits: &Limits) -> Result<SuiteReport> {
    let mut ck = Checker::new(Suite::Cardinality);
    for cx in context_family(bounds) {
        let pictures = cx.pictures(limits)?.len();
        let pairs = cx.crystal_pair_count(limits)?;
        let tableaux = cx.s_set(limits)?.len();
        let mirrored = enumerate_pictures(cx.kappa2(), cx.kappa1(), limits.picture_cells)?.len();
        ck.check("contexts", pictures == pairs && pictures == tableaux && pictures == mirrored, || {
            format!(
                "{} -> {}: {pictures} pictures, {pairs} crystal pairs, {tableaux} LR tableaux, {mirrored} reversed",
                cx.kappa1(),
                cx.kappa2()
            )
        });
    }
    for n in 1..=4 {
        let kappa = disconnected_boxes(n);
        let count = enumerate_pictures(&kappa, &kappa, limits.picture_cells)?.len();
        let factorial: usize = (1..=n).product();
        ck.check("permutations", count == factorial, || format!("{n} boxes: {count} pictures"));
    }
    for nu in Partition::all_in_box(bounds.box_rows, bounds.box_cols, bounds.outer_cells) {
        for lambda in nu.subpartitions() {
            for mu in Partition::all_of_size(nu.size() - lambda.size()) {
                let out = lr_coefficient(&lambda, &mu, &nu, true, limits);
                ck.check("lr-triples", out.is_ok(), || format!("λ={lambda} µ={mu} ν={nu}: {}", out.unwrap_err()));
            }
        }
    }
    Ok(ck.finish())
}

/// All lexicographic arrays of length `m` with entries `≤ n` in both rows.
pub fn lex_arrays(n: usize, m: usize) -> Vec<TwoRowedArray> {
    // pairs in lexicographic order of column type; a multiset of them
    // listed in this order is a lexicographic array
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|u| (1..=n).rev().map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    fn rec(pairs: &[(usize, usize)], start: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<TwoRowedArray>) {
        if cur.len() == m {
            let (u, v) = cur.iter().map(|&i| pairs[i]).unzip();
            out.push(TwoRowedArray::new(u, v).expect("equal lengths"));
            return;
        }
        for i in start..pairs.len() {
            cur.push(i);
            rec(pairs, i, m, cur, out);
            cur.pop();
        }
    }
    rec(&pairs, 0, m, &mut stack, &mut out);
    out
}

fn rsk_bijection(limits: &Limits) -> Result<SuiteReport> {
    let mut ck = Checker::new(Suite::RskBijection);
    for (n, m) in [(3, 3), (2, 4), (4, 2)] {
        let mut images = BTreeSet::new();
        for w in lex_arrays(n, m) {
            let back = rsk_forward(&w).and_then(|(p, q)| {
                let back = rsk_inverse(&p, &q)?;
                images.insert((p.into_rows(), q.into_rows()));
                Ok(back)
            });
            ck.check("arrays", back.as_ref() == Ok(&w), || format!("{w:?} came back as {back:?}"));
        }
        let mut targets = BTreeSet::new();
        for mu in Partition::all_of_size(m) {
            let fillings = enumerate_ssyt(&SkewShape::straight(mu), n, limits.tableau_cells)?;
            for p in &fillings {
                for q in &fillings {
                    targets.insert((p.rows().to_vec(), q.rows().to_vec()));
                }
            }
        }
        let arrays = lex_arrays(n, m).len();
        ck.check("images", images == targets && images.len() == arrays, || {
            format!("W[{n};{m}]: {arrays} arrays, {} distinct images, {} tableau pairs", images.len(), targets.len())
        });
    }
    Ok(ck.finish())
}

/// A random straight semistandard tableau with at most `cells` cells and
/// entries `≤ max_entry`, built by inserting a random word.
pub fn random_tableau(rng: &mut impl Rng, cells: usize, max_entry: usize) -> SkewTableau {
    let len = rng.random_range(0..=cells);
    insert_word((0..len).map(|_| rng.random_range(1..=max_entry)).collect::<Vec<_>>())
}

fn bumping_lemma(bounds: &Bounds, seed: u64) -> SuiteReport {
    let mut ck = Checker::new(Suite::BumpingLemma);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..bounds.random_instances {
        let t = random_tableau(&mut rng, bounds.random_cells, bounds.random_entry);
        let x = rng.random_range(1..=bounds.random_entry);
        let y = rng.random_range(1..=bounds.random_entry);
        let first = column_insert(&t, x).expect("semistandard");
        let second = column_insert(&first.tableau, y).expect("semistandard");
        let (a, b) = (first.new_cell, second.new_cell);
        let ok = if x < y { b.col <= a.col && b.row > a.row } else { a.col < b.col && a.row >= b.row };
        ck.check("instances", ok, || format!("T={:?} x={x} x'={y}: New(x)={a} New(x')={b}", t.rows()));
    }
    ck.finish()
}

/// All words of length `len` over `1..=letters`, in lexicographic order.
pub fn all_words(len: usize, letters: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=letters).map(move |x| {
                    let mut next = w.clone();
                    next.push(x);
                    next
                })
            })
            .collect();
    }
    out
}

fn knuth_crystal(bounds: &Bounds, limits: &Limits) -> Result<SuiteReport> {
    let mut ck = Checker::new(Suite::KnuthCrystal);
    let rank = bounds.word_letters.saturating_sub(1).max(1);
    for len in 0..=bounds.word_len {
        let words = all_words(len, bounds.word_letters);
        let mut by_key: HashMap<SkewTableau, BTreeSet<Vec<usize>>> = HashMap::new();
        for w in &words {
            by_key.entry(insertion_key(w, EquivMode::Knuth)).or_default().insert(w.clone());
        }
        for w in &words {
            let knuth = equivalence_class(w, EquivMode::Knuth, limits.bfs_len)?;
            let reversed: Vec<usize> = w.iter().rev().copied().collect();
            let crystal = equivalence_class(&reversed, EquivMode::Crystal, limits.bfs_len)?;
            let mirrored: BTreeSet<Vec<usize>> = knuth.iter().map(|v| v.iter().rev().copied().collect()).collect();
            ck.check("words", mirrored == crystal, || format!("classes of {w:?} differ under reversal"));
            let key = insertion_key(w, EquivMode::Knuth);
            ck.check("insertion-classes", by_key[&key] == knuth, || {
                format!("insertion class of {w:?} differs from its closure")
            });

            let tw = TensorWord::new(rank, w.clone())?;
            for pos in 0..len.saturating_sub(2) {
                let r = tw.combinatorial_r(pos)?;
                for k in 1..=rank {
                    for op in [CrystalOp::Raise, CrystalOp::Lower] {
                        let lhs = tw.apply(k, op)?.map(|v| v.combinatorial_r(pos)).transpose()?;
                        let rhs = r.apply(k, op)?;
                        ck.check("r-commutes", lhs == rhs, || format!("{w:?} at {pos}, {op:?}_{k}"));
                    }
                }
                if r.letters() != w.as_slice() {
                    ck.check("r-insertion", r_move_keeps_insertion(w, r.letters(), pos), || {
                        format!("{w:?} -> {:?} changes insertion", r.letters())
                    });
                }
            }
        }
    }
    for t in tableaux_up_to(bounds.word_len, bounds.word_letters, limits)? {
        let word = t.skew_word();
        for x in 1..=bounds.word_letters {
            let inserted = column_insert(&t, x)?.tableau.skew_word();
            let mut expected = vec![x];
            expected.extend_from_slice(word.letters());
            let class = equivalence_class(&expected, EquivMode::Knuth, limits.bfs_len)?;
            ck.check("insertion-words", class.contains(inserted.letters()), || {
                format!("{x} -> {:?} reads {:?}", t.rows(), inserted.letters())
            });
        }
    }
    Ok(ck.finish())
}

/// An R move on the window at `pos` swaps two adjacent letters and leaves
/// the left-to-right column insertion tableau unchanged. When the window's
/// first letter stays put, each of the two swapped letters also keeps its
/// new box, and every other step's new box is unchanged.
fn r_move_keeps_insertion(before: &[usize], after: &[usize], pos: usize) -> bool {
    let (t, cells) = insert_word_tracking(before.iter().copied());
    let (t2, cells2) = insert_word_tracking(after.iter().copied());
    if t != t2 {
        return false;
    }
    if before[pos] != after[pos] {
        return true;
    }
    let (i, j) = (pos + 1, pos + 2);
    (0..cells.len()).all(|s| {
        let source = if s == i {
            j
        } else if s == j {
            i
        } else {
            s
        };
        cells2[s] == cells[source]
    })
}

fn tableaux_up_to(cells: usize, max_entry: usize, limits: &Limits) -> Result<Vec<SkewTableau>> {
    let mut out = Vec::new();
    for size in 0..=cells {
        for mu in Partition::all_of_size(size) {
            out.extend(enumerate_ssyt(&SkewShape::straight(mu), max_entry, limits.tableau_cells)?);
        }
    }
    Ok(out)
}

fn lr_highest(limits: &Limits) -> Result<SuiteReport> {
    let mut ck = Checker::new(Suite::LrHighest);
    for rank in 1..=3 {
        for t in tableaux_up_to(4, rank + 1, limits)? {
            let me = t.me_reading(rank)?;
            // λ must fit in rank + 1 rows for Y_λ to be a rank-`rank` word
            for lambda in Partition::all_in_box(3.min(rank + 1), 3, 9) {
                let valid = add_sequence(&lambda, me.letters()).valid;
                let highest = highest_tableau(&lambda).me_reading(rank)?.tensor(&me)?.is_highest_weight();
                ck.check("tableaux", valid == highest, || {
                    format!("rank {rank}, λ={lambda}, T={:?}: addition {valid}, highest weight {highest}", t.rows())
                });
            }
        }
    }
    for n in [2, 3] {
        let count = |shape: &Partition| -> Result<usize> {
            Ok(enumerate_ssyt(&SkewShape::straight(shape.clone()), n, limits.tableau_cells)?.len())
        };
        let small: Vec<Partition> = Partition::all_in_box(n, 3, 3);
        for lambda in &small {
            for mu in &small {
                let mut sum = 0;
                for t in enumerate_ssyt(&SkewShape::straight(mu.clone()), n, limits.tableau_cells)? {
                    if let Some(shape) = add_sequence(lambda, &t.j_order_letters()).partition() {
                        sum += count(&shape)?;
                    }
                }
                let product = count(lambda)? * count(mu)?;
                ck.check("decomposition", product == sum, || format!("n={n}, λ={lambda}, µ={mu}: {product} vs {sum}"));
            }
        }
    }
    Ok(ck.finish())
}
