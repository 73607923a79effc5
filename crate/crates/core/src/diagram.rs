//! Dynkin diagrams of the simple types, marked vertex subsets, induced
//! subdiagram extraction and diagram involutions.
//!
//! Vertex numbering follows the Bourbaki convention throughout:
//!
//! * `A_n`: chain `1 - 2 - ... - n`.
//! * `B_n`/`C_n`: chain `1..n` with the double bond between `n-1` and `n`;
//!   the arrow points at `n` for B and at `n-1` for C.
//! * `D_n`: chain `1..n-2`, fork vertices `n-1` and `n` attached to `n-2`.
//! * `E_6`: chain `1 - 3 - 4 - 5 - 6` with `2` attached to `4`; `E_7`, `E_8`
//!   extend the chain by `7` and `8`.
//! * `F_4`: `1 - 2 => 3 - 4`.
//! * `G_2`: `1 ≡> 2`.
//!
//! Arrow directions are recorded but never consumed by the move engine; they
//! only matter when naming induced subdiagrams.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    /// Legal rank range of the family, so that every (family, rank) pair
    /// names exactly one simple diagram.
    fn rank_range(self) -> (usize, usize) {
        match self {
            Family::A => (1, usize::MAX),
            Family::B | Family::C => (2, usize::MAX),
            Family::D => (4, usize::MAX),
            Family::E => (6, 8),
            Family::F => (4, 4),
            Family::G => (2, 2),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple Dynkin type, e.g. `E6`. Construction validates the rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

/// One edge of a Dynkin diagram. `head` is the arrow target (the short-root
/// side), present exactly when `multiplicity > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bond {
    pub a: usize,
    pub b: usize,
    pub multiplicity: u8,
    pub head: Option<usize>,
}

impl Bond {
    fn single(a: usize, b: usize) -> Bond {
        Bond {
            a,
            b,
            multiplicity: 1,
            head: None,
        }
    }

    fn multiple(a: usize, b: usize, multiplicity: u8, head: usize) -> Bond {
        Bond {
            a,
            b,
            multiplicity,
            head: Some(head),
        }
    }

    pub fn touches(&self, v: usize) -> bool {
        self.a == v || self.b == v
    }

    pub fn other(&self, v: usize) -> usize {
        if self.a == v {
            self.b
        } else {
            self.a
        }
    }
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<DynkinType> {
        let (lo, hi) = family.rank_range();
        if rank < lo || rank > hi {
            return Err(Error::RankOutOfRange {
                family: family.letter(),
                rank,
            });
        }
        Ok(DynkinType { family, rank })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.rank
    }

    /// Edges in Bourbaki numbering, sorted by endpoints.
    pub fn bonds(&self) -> Vec<Bond> {
        let n = self.rank;
        let mut bonds = match self.family {
            Family::A => (1..n).map(|i| Bond::single(i, i + 1)).collect::<Vec<_>>(),
            Family::B | Family::C => {
                let mut v: Vec<_> = (1..n - 1).map(|i| Bond::single(i, i + 1)).collect();
                let head = if self.family == Family::B { n } else { n - 1 };
                v.push(Bond::multiple(n - 1, n, 2, head));
                v
            }
            Family::D => {
                let mut v: Vec<_> = (1..n - 2).map(|i| Bond::single(i, i + 1)).collect();
                v.push(Bond::single(n - 2, n - 1));
                v.push(Bond::single(n - 2, n));
                v
            }
            Family::E => {
                let mut v = vec![Bond::single(1, 3), Bond::single(2, 4)];
                v.extend((3..n).map(|i| Bond::single(i, i + 1)));
                v
            }
            Family::F => vec![
                Bond::single(1, 2),
                Bond::multiple(2, 3, 2, 3),
                Bond::single(3, 4),
            ],
            Family::G => vec![Bond::multiple(1, 2, 3, 2)],
        };
        bonds.sort_by_key(|e| (e.a.min(e.b), e.a.max(e.b)));
        bonds
    }

    /// All simple types with rank at most `max_rank`, for exhaustive scans.
    pub fn enumerate(max_rank: usize) -> Vec<DynkinType> {
        let mut out = Vec::new();
        for family in [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ] {
            let (lo, hi) = family.rank_range();
            for rank in lo..=hi.min(max_rank) {
                out.push(DynkinType { family, rank });
            }
        }
        out
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A Dynkin diagram with a distinguished set of marked vertices.
///
/// The diagram grammar requires at least one mark, but the type itself
/// allows an empty mark set: the contraction of a single-marked diagram has
/// none left.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MarkedDiagram {
    ty: DynkinType,
    marks: BTreeSet<usize>,
}

impl MarkedDiagram {
    pub fn new(ty: DynkinType, marks: impl IntoIterator<Item = usize>) -> Result<MarkedDiagram> {
        let marks: BTreeSet<usize> = marks.into_iter().collect();
        for &m in &marks {
            if m < 1 || m > ty.rank() {
                return Err(Error::MarkOutOfRange {
                    mark: m,
                    rank: ty.rank(),
                });
            }
        }
        Ok(MarkedDiagram { ty, marks })
    }

    pub fn ty(&self) -> DynkinType {
        self.ty
    }

    pub fn marks(&self) -> &BTreeSet<usize> {
        &self.marks
    }

    /// The contraction at `v`: same diagram with `v` unmarked.
    pub fn unmark(&self, v: usize) -> MarkedDiagram {
        let mut marks = self.marks.clone();
        marks.remove(&v);
        MarkedDiagram { ty: self.ty, marks }
    }

    /// Compact grammar form, e.g. `A5[1,3]`.
    pub fn compact(&self) -> String {
        let ids: Vec<String> = self.marks.iter().map(|m| m.to_string()).collect();
        format!("{}[{}]", self.ty, ids.join(","))
    }
}

impl fmt::Display for MarkedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl FromStr for MarkedDiagram {
    type Err = Error;

    /// Grammar: `FAMILY RANK '[' id (',' id)* ']'`, whitespace ignored.
    fn from_str(s: &str) -> Result<MarkedDiagram> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let malformed = || Error::MalformedDiagram(s.trim().to_string());

        let mut chars = compact.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(malformed)?;
        let rest = chars.as_str();
        let open = rest.find('[').ok_or_else(malformed)?;
        let rank: usize = rest[..open].parse().map_err(|_| malformed())?;
        let ty = DynkinType::new(family, rank)?;

        if !rest.ends_with(']') {
            return Err(malformed());
        }
        let body = &rest[open + 1..rest.len() - 1];
        if body.is_empty() {
            return Err(malformed());
        }
        let mut marks = BTreeSet::new();
        for item in body.split(',') {
            let id: usize = item.parse().map_err(|_| malformed())?;
            if id < 1 || id > rank {
                return Err(Error::MarkOutOfRange { mark: id, rank });
            }
            if !marks.insert(id) {
                return Err(Error::DuplicateMark(id));
            }
        }
        Ok(MarkedDiagram { ty, marks })
    }
}

impl Serialize for MarkedDiagram {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("MarkedDiagram", 3)?;
        st.serialize_field("family", &self.ty.family().letter().to_string())?;
        st.serialize_field("rank", &self.ty.rank())?;
        st.serialize_field("marks", &self.marks)?;
        st.end()
    }
}

/// A connected induced subdiagram, classified to its own Dynkin type and
/// remembering where its Bourbaki positions sit in the ambient diagram.
///
/// `embedding[p - 1]` is the ambient vertex at position `p` of `ty`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub ty: DynkinType,
    pub embedding: Vec<usize>,
    /// Surviving marks, as ambient vertex ids.
    pub marks: BTreeSet<usize>,
}

impl Component {
    /// Bourbaki position (1-based) of an ambient vertex inside this component.
    pub fn position_of(&self, ambient: usize) -> Option<usize> {
        self.embedding
            .iter()
            .position(|&v| v == ambient)
            .map(|i| i + 1)
    }

    pub fn ambient_of(&self, position: usize) -> usize {
        self.embedding[position - 1]
    }

    pub fn contains(&self, ambient: usize) -> bool {
        self.embedding.contains(&ambient)
    }

    /// The unique nontrivial diagram automorphism, as a map on ambient ids.
    ///
    /// Chain reversal for `A_n` (n >= 2), the fork swap for `D_n`, and the
    /// order-2 symmetry `1<->6, 3<->5` for `E6`. Everything else has none.
    pub fn involution(&self) -> Result<BTreeMap<usize, usize>> {
        let n = self.ty.rank();
        let position_map: Vec<usize> = match self.ty.family() {
            Family::A if n >= 2 => (1..=n).map(|i| n + 1 - i).collect(),
            Family::D => (1..=n)
                .map(|i| match i {
                    i if i == n - 1 => n,
                    i if i == n => n - 1,
                    i => i,
                })
                .collect(),
            Family::E if n == 6 => vec![6, 2, 5, 4, 3, 1],
            _ => return Err(Error::NoDual(self.ty)),
        };
        Ok((1..=n)
            .map(|i| (self.ambient_of(i), self.ambient_of(position_map[i - 1])))
            .collect())
    }
}

/// A component carrying exactly one mark.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingleMarkedComponent {
    pub underlying: Component,
    /// Ambient id of the mark.
    pub mark: usize,
}

impl SingleMarkedComponent {
    pub fn mark_position(&self) -> usize {
        self.underlying
            .position_of(self.mark)
            .expect("mark lies in the component")
    }

    pub fn involution(&self) -> Result<BTreeMap<usize, usize>> {
        self.underlying.involution()
    }
}

impl TryFrom<Component> for SingleMarkedComponent {
    type Error = Error;

    fn try_from(c: Component) -> Result<SingleMarkedComponent> {
        if c.marks.len() != 1 {
            return Err(Error::NotSingleMarked(c.marks.len()));
        }
        let mark = *c.marks.iter().next().unwrap();
        Ok(SingleMarkedComponent {
            underlying: c,
            mark,
        })
    }
}

/// Connected components of the induced subgraph on `vertices \ removed`,
/// each classified to its Dynkin type with surviving marks attached.
///
/// Components are ordered by their smallest ambient vertex.
pub fn delete_vertices(d: &MarkedDiagram, removed: &BTreeSet<usize>) -> Result<Vec<Component>> {
    let rank = d.ty().rank();
    for &v in removed {
        if v < 1 || v > rank {
            return Err(Error::VertexOutOfRange { vertex: v, rank });
        }
    }
    let remaining: BTreeSet<usize> = d.ty().vertices().filter(|v| !removed.contains(v)).collect();
    let bonds: Vec<Bond> = d
        .ty()
        .bonds()
        .into_iter()
        .filter(|e| remaining.contains(&e.a) && remaining.contains(&e.b))
        .collect();

    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut components = Vec::new();
    for &start in &remaining {
        if seen.contains(&start) {
            continue;
        }
        // BFS over the induced subgraph.
        let mut queue = vec![start];
        let mut verts = BTreeSet::new();
        while let Some(v) = queue.pop() {
            if !verts.insert(v) {
                continue;
            }
            for e in bonds.iter().filter(|e| e.touches(v)) {
                queue.push(e.other(v));
            }
        }
        seen.extend(verts.iter().copied());
        let induced: Vec<Bond> = bonds
            .iter()
            .filter(|e| verts.contains(&e.a))
            .copied()
            .collect();
        let (ty, embedding) = classify_subgraph(&verts, &induced)?;
        let marks = d.marks().intersection(&verts).copied().collect();
        components.push(Component {
            ty,
            embedding,
            marks,
        });
    }
    Ok(components)
}

/// Classify a connected multiplicty-labelled tree as a Dynkin diagram and
/// produce the Bourbaki embedding. Induced subgraphs of simple diagrams
/// always classify; anything else errors.
fn classify_subgraph(verts: &BTreeSet<usize>, bonds: &[Bond]) -> Result<(DynkinType, Vec<usize>)> {
    let n = verts.len();
    if bonds.len() + 1 != n {
        return Err(Error::UnclassifiableComponent);
    }
    if n == 1 {
        let v = *verts.iter().next().unwrap();
        return Ok((DynkinType::new(Family::A, 1)?, vec![v]));
    }

    let mut adj: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for e in bonds {
        adj.entry(e.a).or_default().push(e.b);
        adj.entry(e.b).or_default().push(e.a);
    }

    if let Some(triple) = bonds.iter().find(|e| e.multiplicity == 3) {
        if n != 2 {
            return Err(Error::UnclassifiableComponent);
        }
        let head = triple.head.unwrap();
        return Ok((
            DynkinType::new(Family::G, 2)?,
            vec![triple.other(head), head],
        ));
    }

    if let Some(double) = bonds.iter().find(|e| e.multiplicity == 2) {
        return classify_doubly_laced(&adj, n, double);
    }

    // Simply laced: a chain or a single fork.
    let forks: Vec<usize> = adj
        .iter()
        .filter(|(_, nb)| nb.len() >= 3)
        .map(|(&v, _)| v)
        .collect();
    match forks.len() {
        0 => {
            let chain = chain_order(&adj)?;
            Ok((DynkinType::new(Family::A, n)?, chain))
        }
        1 if adj[&forks[0]].len() == 3 => classify_forked(&adj, forks[0]),
        _ => Err(Error::UnclassifiableComponent),
    }
}

/// Order the vertices of a chain from the endpoint with the smaller ambient
/// id. Errors if the graph is not a chain.
fn chain_order(adj: &BTreeMap<usize, Vec<usize>>) -> Result<Vec<usize>> {
    let mut ends: Vec<usize> = adj
        .iter()
        .filter(|(_, nb)| nb.len() == 1)
        .map(|(&v, _)| v)
        .collect();
    if ends.len() != 2 || adj.values().any(|nb| nb.len() > 2) {
        return Err(Error::UnclassifiableComponent);
    }
    ends.sort_unstable();
    let mut chain = vec![ends[0]];
    let mut prev = None;
    while chain.len() < adj.len() {
        let cur = *chain.last().unwrap();
        let next = adj[&cur]
            .iter()
            .copied()
            .find(|&v| Some(v) != prev)
            .ok_or(Error::UnclassifiableComponent)?;
        prev = Some(cur);
        chain.push(next);
    }
    Ok(chain)
}

fn classify_doubly_laced(
    adj: &BTreeMap<usize, Vec<usize>>,
    n: usize,
    double: &Bond,
) -> Result<(DynkinType, Vec<usize>)> {
    let mut chain = chain_order(adj)?;
    let head = double.head.unwrap();
    let tail = double.other(head);
    if n == 2 {
        // B2 and C2 are the same diagram; present it as B2, arrow at 2.
        return Ok((DynkinType::new(Family::B, 2)?, vec![tail, head]));
    }
    let idx = |v: usize, chain: &[usize]| chain.iter().position(|&x| x == v).unwrap();
    let at_end = |chain: &[usize]| {
        let (i, j) = (idx(double.a, chain), idx(double.b, chain));
        i.min(j) == 0 || i.max(j) == n - 1
    };
    if at_end(&chain) {
        if idx(double.a, &chain).min(idx(double.b, &chain)) == 0 {
            chain.reverse();
        }
        let family = if chain[n - 1] == head {
            Family::B
        } else {
            Family::C
        };
        Ok((DynkinType::new(family, n)?, chain))
    } else {
        // Interior double bond: only the full F4 diagram has this shape.
        if n != 4 {
            return Err(Error::UnclassifiableComponent);
        }
        if chain[1] == head {
            chain.reverse();
        }
        if chain[2] != head {
            return Err(Error::UnclassifiableComponent);
        }
        Ok((DynkinType::new(Family::F, 4)?, chain))
    }
}

fn classify_forked(
    adj: &BTreeMap<usize, Vec<usize>>,
    fork: usize,
) -> Result<(DynkinType, Vec<usize>)> {
    // Walk each arm outward from the fork vertex.
    let mut arms: Vec<Vec<usize>> = Vec::new();
    for &first in &adj[&fork] {
        let mut arm = vec![first];
        let mut prev = fork;
        loop {
            let cur = *arm.last().unwrap();
            match adj[&cur].iter().copied().find(|&v| v != prev) {
                Some(next) => {
                    if adj[&cur].len() > 2 {
                        return Err(Error::UnclassifiableComponent);
                    }
                    prev = cur;
                    arm.push(next);
                }
                None => break,
            }
        }
        arms.push(arm);
    }
    arms.sort_by_key(|a| (a.len(), *a.last().unwrap()));
    let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();

    match lens.as_slice() {
        [1, 1, 1] => {
            // D4: leaves by ambient id onto positions 1, 3, 4.
            let mut leaves = [arms[0][0], arms[1][0], arms[2][0]];
            leaves.sort_unstable();
            Ok((
                DynkinType::new(Family::D, 4)?,
                vec![leaves[0], fork, leaves[1], leaves[2]],
            ))
        }
        [1, 1, len] => {
            // D_n: the long arm is the chain 1..n-3, fork leaves take n-1, n.
            let m = len + 3;
            let mut embedding: Vec<usize> = arms[2].iter().rev().copied().collect();
            embedding.push(fork);
            let mut leaves = vec![arms[0][0], arms[1][0]];
            leaves.sort_unstable();
            embedding.extend(leaves);
            Ok((DynkinType::new(Family::D, m)?, embedding))
        }
        [1, 2, 2] => {
            // E6: the arm with the smaller outer vertex takes positions (3, 1).
            let left = &arms[1];
            let right = &arms[2];
            Ok((
                DynkinType::new(Family::E, 6)?,
                vec![left[1], arms[0][0], left[0], fork, right[0], right[1]],
            ))
        }
        [1, 2, len @ (3 | 4)] => {
            let short = &arms[1];
            let mut embedding = vec![short[1], arms[0][0], short[0], fork];
            embedding.extend(arms[2].iter());
            Ok((DynkinType::new(Family::E, len + 4)?, embedding))
        }
        _ => Err(Error::UnclassifiableComponent),
    }
}

/// Marked chain diagram of an `SL(n)` flag type: the flag `(d1,...,dr)` marks
/// the cumulative sums `d1, d1+d2, ...` (the total is dropped) on `A_{n-1}`.
pub fn from_flag_type_a(flag: &[usize]) -> Result<MarkedDiagram> {
    if flag.len() < 2 || flag.contains(&0) {
        return Err(Error::FlagShapeUnsupported(format!(
            "flag {flag:?} must have at least two positive parts"
        )));
    }
    let n: usize = flag.iter().sum();
    let marks: Vec<usize> = flag[..flag.len() - 1]
        .iter()
        .scan(0, |acc, d| {
            *acc += d;
            Some(*acc)
        })
        .collect();
    MarkedDiagram::new(DynkinType::new(Family::A, n - 1)?, marks)
}

/// Flag type of a type-A marked diagram: mark positions back to block sizes.
pub fn flag_type_a(d: &MarkedDiagram) -> Result<Vec<usize>> {
    if d.ty().family() != Family::A {
        return Err(Error::FlagShapeUnsupported(format!(
            "{} is not a type-A diagram",
            d.ty()
        )));
    }
    let mut flag = Vec::new();
    let mut prev = 0;
    for &m in d.marks() {
        flag.push(m - prev);
        prev = m;
    }
    flag.push(d.ty().rank() + 1 - prev);
    Ok(flag)
}

/// The `(k, q, k)` isotropic flag of a single-marked B/C/D diagram. Fork
/// marks of `D_n` give `(n, 0, n)`.
pub fn isotropic_flag(d: &MarkedDiagram) -> Result<(usize, usize, usize)> {
    if d.marks().len() != 1 {
        return Err(Error::NotSingleMarked(d.marks().len()));
    }
    let mark = *d.marks().iter().next().unwrap();
    let n = d.ty().rank();
    match d.ty().family() {
        Family::B => Ok((mark, 2 * n + 1 - 2 * mark, mark)),
        Family::C => Ok((mark, 2 * n - 2 * mark, mark)),
        Family::D => {
            let k = if mark >= n - 1 { n } else { mark };
            Ok((k, 2 * n - 2 * k, k))
        }
        _ => Err(Error::FlagShapeUnsupported(format!(
            "{} does not carry a (k,q,k) isotropic flag",
            d.ty()
        ))),
    }
}
