//! Generic pipe dream tiles, boundary conditions and enumeration.
//!
//! Squares are indexed `(i, j)` with rows `i = 1..k` top to bottom and
//! columns `j = 1..n` left to right. Each square consumes its West and
//! South edges and produces its North and East edges; pipes only travel
//! North and East. Edge labels are small integers, `None` is a blank edge.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use serde_json::{json, Value};
use thiserror::Error;

use crate::symmetric::{PartialPermutation, Permutation};

pub type Label = u16;
/// The label carried by an edge, `None` when blank.
pub type EdgeLabel = Option<Label>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GpdError {
    #[error("inconsistent boundary specification: {0}")]
    InconsistentSpec(String),
    #[error("malformed pipe dream: {0}")]
    Parse(String),
}

/// The seven local connectivity patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tile {
    /// `a`: West to North and South to East.
    Bump,
    /// `j`: West to North.
    ElbowJ,
    /// `r`: South to East.
    ElbowR,
    /// `c`: West to East and South to North.
    Cross,
    /// `h`: West to East.
    Horizontal,
    /// `v`: South to North.
    Vertical,
    Blank,
}

impl Tile {
    pub const ALL: [Tile; 7] = [
        Tile::Bump,
        Tile::ElbowJ,
        Tile::ElbowR,
        Tile::Cross,
        Tile::Horizontal,
        Tile::Vertical,
        Tile::Blank,
    ];

    pub fn code(self) -> char {
        match self {
            Tile::Bump => 'a',
            Tile::ElbowJ => 'j',
            Tile::ElbowR => 'r',
            Tile::Cross => 'c',
            Tile::Horizontal => 'h',
            Tile::Vertical => 'v',
            Tile::Blank => '.',
        }
    }

    pub fn from_code(c: char) -> Option<Tile> {
        Tile::ALL.into_iter().find(|t| t.code() == c)
    }

    /// Tiles in which a pipe changes direction (`a`, `j`, `r`).
    pub fn is_turn(self) -> bool {
        matches!(self, Tile::Bump | Tile::ElbowJ | Tile::ElbowR)
    }

    /// `(North, East)` outputs for the given `(West, South)` inputs, or
    /// `None` if the inputs do not fit the tile.
    pub fn route(self, west: EdgeLabel, south: EdgeLabel) -> Option<(EdgeLabel, EdgeLabel)> {
        match (self, west.is_some(), south.is_some()) {
            (Tile::Cross, true, true) => Some((south, west)),
            (Tile::Bump, true, true) => Some((west, south)),
            (Tile::Horizontal, true, false) => Some((None, west)),
            (Tile::ElbowJ, true, false) => Some((west, None)),
            (Tile::Vertical, false, true) => Some((south, None)),
            (Tile::ElbowR, false, true) => Some((None, south)),
            (Tile::Blank, false, false) => Some((None, None)),
            _ => None,
        }
    }
}

impl fmt::Display for Tile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

/// A subset of the seven tiles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TileSet(u8);

impl TileSet {
    pub const ALL: TileSet = TileSet(0x7f);
    /// Only bumps and crosses, as on the heap of a word.
    pub const BUMP_CROSS: TileSet = TileSet((1 << Tile::Bump as u8) | (1 << Tile::Cross as u8));

    pub fn of(tiles: &[Tile]) -> TileSet {
        TileSet(tiles.iter().fold(0, |acc, &t| acc | (1 << t as u8)))
    }

    pub fn contains(self, t: Tile) -> bool {
        self.0 & (1 << t as u8) != 0
    }
}

/// Candidate tiles for a square in the fixed order used by the enumerator:
/// `c` before `a`, `h` before `j`, `v` before `r`.
pub fn tile_options(
    west: EdgeLabel,
    south: EdgeLabel,
    allowed: TileSet,
) -> impl Iterator<Item = (Tile, EdgeLabel, EdgeLabel)> {
    let candidates: &[Tile] = match (west.is_some(), south.is_some()) {
        (true, true) => &[Tile::Cross, Tile::Bump],
        (true, false) => &[Tile::Horizontal, Tile::ElbowJ],
        (false, true) => &[Tile::Vertical, Tile::ElbowR],
        (false, false) => &[Tile::Blank],
    };
    candidates.iter().filter(move |&&t| allowed.contains(t)).map(move |&t| {
        let (n, e) = t.route(west, south).expect("candidate fits its inputs");
        (t, n, e)
    })
}

/// A constraint on one boundary edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Constraint {
    Label(Label),
    Blank,
    /// Any label, or blank, is acceptable. Only meaningful on North/East.
    Free,
}

impl Constraint {
    fn admits(self, e: EdgeLabel) -> bool {
        match self {
            Constraint::Label(l) => e == Some(l),
            Constraint::Blank => e.is_none(),
            Constraint::Free => true,
        }
    }

    /// The label an input edge carries under this constraint.
    pub fn input_label(self) -> EdgeLabel {
        match self {
            Constraint::Label(l) => Some(l),
            _ => None,
        }
    }
}

/// Boundary conditions and allowed tiles for a `rows × cols` rectangle.
///
/// `west`/`east` are listed top to bottom, `north`/`south` left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundarySpec {
    pub rows: usize,
    pub cols: usize,
    pub west: Vec<Constraint>,
    pub north: Vec<Constraint>,
    pub east: Vec<Constraint>,
    pub south: Vec<Constraint>,
    pub allowed: TileSet,
}

impl BoundarySpec {
    /// West labels `1..n` top to bottom, North labels `w⁻¹(1..n)`, East and
    /// South blank, every tile allowed.
    pub fn standard(w: &Permutation) -> BoundarySpec {
        let n = w.size();
        let inv = w.inverse();
        BoundarySpec {
            rows: n,
            cols: n,
            west: (1..=n).map(|i| Constraint::Label(i as Label)).collect(),
            north: (1..=n).map(|j| Constraint::Label(inv.apply(j) as Label)).collect(),
            east: vec![Constraint::Blank; n],
            south: vec![Constraint::Blank; n],
            allowed: TileSet::ALL,
        }
    }

    /// The square for a double Bruhat cell: `1..n` down the West, `n+1..2n`
    /// along the South, `u⁻¹(j)` on the North, `n+v⁻¹(i)` down the East,
    /// bumps and crosses only.
    pub fn double_bruhat(u: &Permutation, v: &Permutation) -> BoundarySpec {
        let n = u.size();
        assert_eq!(n, v.size(), "u and v must lie in the same symmetric group");
        let (ui, vi) = (u.inverse(), v.inverse());
        BoundarySpec {
            rows: n,
            cols: n,
            west: (1..=n).map(|i| Constraint::Label(i as Label)).collect(),
            north: (1..=n).map(|j| Constraint::Label(ui.apply(j) as Label)).collect(),
            east: (1..=n).map(|i| Constraint::Label((n + vi.apply(i)) as Label)).collect(),
            south: (1..=n).map(|j| Constraint::Label((n + j) as Label)).collect(),
            allowed: TileSet::BUMP_CROSS,
        }
    }

    /// The `k × n` rectangle for the orbit of a partial permutation: pipe
    /// `i` enters West row `i` (top row is 1) and leaves North column `j`
    /// when `w_ij = 1`, through any East edge otherwise.
    pub fn partial(w: &PartialPermutation) -> BoundarySpec {
        let (k, n) = (w.rows(), w.cols());
        BoundarySpec {
            rows: k,
            cols: n,
            west: (1..=k).map(|i| Constraint::Label(i as Label)).collect(),
            north: (1..=n)
                .map(|j| match w.row_of_col(j) {
                    Some(i) => Constraint::Label(i as Label),
                    None => Constraint::Blank,
                })
                .collect(),
            east: vec![Constraint::Free; k],
            south: vec![Constraint::Blank; n],
            allowed: TileSet::ALL,
        }
    }

    fn validate(&self) -> Result<(), GpdError> {
        let bad = |m: String| Err(GpdError::InconsistentSpec(m));
        if self.rows == 0 || self.cols == 0 {
            return bad("empty rectangle".into());
        }
        if self.west.len() != self.rows || self.east.len() != self.rows {
            return bad("West/East lengths differ from the row count".into());
        }
        if self.north.len() != self.cols || self.south.len() != self.cols {
            return bad("North/South lengths differ from the column count".into());
        }
        let mut inputs = Vec::new();
        for c in self.west.iter().chain(&self.south) {
            match c {
                Constraint::Free => return bad("Free constraint on an input edge".into()),
                Constraint::Label(0) => return bad("label 0 is reserved".into()),
                Constraint::Label(l) => inputs.push(*l),
                Constraint::Blank => {}
            }
        }
        let mut outputs: Vec<Label> = self
            .north
            .iter()
            .chain(&self.east)
            .filter_map(|c| c.input_label())
            .collect();
        for (side, labels) in [("input", &mut inputs), ("output", &mut outputs)] {
            labels.sort_unstable();
            if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
                return bad(format!("label {} appears on two {side} edges", w[0]));
            }
        }
        Ok(())
    }
}

/// A filled rectangle with the label carried by every edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gpd {
    rows: usize,
    cols: usize,
    tiles: Vec<Tile>,
    west: Vec<EdgeLabel>,
    south: Vec<EdgeLabel>,
    north_out: Vec<EdgeLabel>,
    east_out: Vec<EdgeLabel>,
}

impl Gpd {
    /// Propagates labels through a tile grid from the West and South inputs.
    pub fn from_tiles(
        tiles: Vec<Vec<Tile>>,
        west: Vec<EdgeLabel>,
        south: Vec<EdgeLabel>,
    ) -> Result<Gpd, GpdError> {
        let rows = tiles.len();
        let cols = tiles.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 || tiles.iter().any(|r| r.len() != cols) {
            return Err(GpdError::Parse("tile grid must be a non-empty rectangle".into()));
        }
        if west.len() != rows || south.len() != cols {
            return Err(GpdError::Parse("boundary lengths do not match the grid".into()));
        }
        let mut g = Gpd {
            rows,
            cols,
            tiles: tiles.into_iter().flatten().collect(),
            west,
            south,
            north_out: vec![None; rows * cols],
            east_out: vec![None; rows * cols],
        };
        for i in (1..=rows).rev() {
            for j in 1..=cols {
                let (w, s) = (g.west_in(i, j), g.south_in(i, j));
                let t = g.tile(i, j);
                let (n, e) = t.route(w, s).ok_or_else(|| {
                    GpdError::Parse(format!("tile `{t}` at ({i},{j}) does not fit its inputs"))
                })?;
                let idx = g.index(i, j);
                g.north_out[idx] = n;
                g.east_out[idx] = e;
            }
        }
        Ok(g)
    }

    /// Reads the single-character grid format produced by [`Gpd::render`].
    pub fn parse_grid(text: &str, west: Vec<EdgeLabel>, south: Vec<EdgeLabel>) -> Result<Gpd, GpdError> {
        let tiles = text
            .lines()
            .map(str::trim_end)
            .filter(|l| !l.is_empty())
            .map(|line| {
                line.chars()
                    .map(|c| Tile::from_code(c).ok_or_else(|| GpdError::Parse(format!("unknown tile `{c}`"))))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Gpd::from_tiles(tiles, west, south)
    }

    fn index(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.cols + (j - 1)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn tile(&self, i: usize, j: usize) -> Tile {
        self.tiles[self.index(i, j)]
    }

    pub fn tile_rows(&self) -> Vec<Vec<Tile>> {
        self.tiles.chunks(self.cols).map(<[Tile]>::to_vec).collect()
    }

    /// Iterates `((i, j), tile)` in row-major order.
    pub fn squares(&self) -> impl Iterator<Item = ((usize, usize), Tile)> + '_ {
        let cols = self.cols;
        self.tiles
            .iter()
            .enumerate()
            .map(move |(k, &t)| ((k / cols + 1, k % cols + 1), t))
    }

    pub fn west_in(&self, i: usize, j: usize) -> EdgeLabel {
        if j == 1 {
            self.west[i - 1]
        } else {
            self.east_out[self.index(i, j - 1)]
        }
    }

    pub fn south_in(&self, i: usize, j: usize) -> EdgeLabel {
        if i == self.rows {
            self.south[j - 1]
        } else {
            self.north_out[self.index(i + 1, j)]
        }
    }

    pub fn north_out(&self, i: usize, j: usize) -> EdgeLabel {
        self.north_out[self.index(i, j)]
    }

    pub fn east_out(&self, i: usize, j: usize) -> EdgeLabel {
        self.east_out[self.index(i, j)]
    }

    pub fn west_boundary(&self) -> &[EdgeLabel] {
        &self.west
    }

    pub fn south_boundary(&self) -> &[EdgeLabel] {
        &self.south
    }

    pub fn north_boundary(&self) -> Vec<EdgeLabel> {
        (1..=self.cols).map(|j| self.north_out(1, j)).collect()
    }

    pub fn east_boundary(&self) -> Vec<EdgeLabel> {
        (1..=self.rows).map(|i| self.east_out(i, self.cols)).collect()
    }

    pub fn count_tiles(&self, pred: impl Fn(Tile) -> bool) -> usize {
        self.tiles.iter().filter(|&&t| pred(t)).count()
    }

    /// Squares visited by the pipe with label `l`, in travel order.
    pub fn pipe_path(&self, l: Label) -> Vec<(usize, usize)> {
        let mut path = Vec::new();
        for i in (1..=self.rows).rev() {
            for j in 1..=self.cols {
                if self.west_in(i, j) == Some(l) || self.south_in(i, j) == Some(l) {
                    path.push((i, j));
                }
            }
        }
        // Scan order is already travel order: pipes move North or East.
        path
    }

    /// Canonical text form: one line per row, tile codes, `.` for blank.
    pub fn render(&self) -> String {
        self.tile_rows()
            .iter()
            .map(|r| r.iter().map(|t| t.code()).collect::<String>())
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn to_json(&self) -> Value {
        let tiles: Vec<Vec<String>> = self
            .tile_rows()
            .iter()
            .map(|r| r.iter().map(|t| t.code().to_string()).collect())
            .collect();
        json!({
            "rows": self.rows,
            "cols": self.cols,
            "tiles": tiles,
            "west": self.west,
            "north": self.north_boundary(),
            "east": self.east_boundary(),
            "south": self.south,
        })
    }

    pub fn from_json(value: &Value) -> Result<Gpd, GpdError> {
        let bad = |m: &str| GpdError::Parse(m.to_string());
        let labels = |key: &str| -> Result<Vec<EdgeLabel>, GpdError> {
            value
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| bad(&format!("missing `{key}` array")))?
                .iter()
                .map(|v| match v {
                    Value::Null => Ok(None),
                    v => v
                        .as_u64()
                        .and_then(|l| Label::try_from(l).ok())
                        .filter(|&l| l > 0)
                        .map(Some)
                        .ok_or_else(|| bad("labels must be positive integers or null")),
                })
                .collect()
        };
        let tiles = value
            .get("tiles")
            .and_then(Value::as_array)
            .ok_or_else(|| bad("missing `tiles` array"))?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| bad("tile rows must be arrays"))?
                    .iter()
                    .map(|t| {
                        let s = t.as_str().unwrap_or("");
                        let mut cs = s.chars();
                        match (cs.next().and_then(Tile::from_code), cs.next()) {
                            (Some(tile), None) => Ok(tile),
                            _ => Err(bad(&format!("unknown tile {t}"))),
                        }
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let g = Gpd::from_tiles(tiles, labels("west")?, labels("south")?)?;
        let dims = (value.get("rows").and_then(Value::as_u64), value.get("cols").and_then(Value::as_u64));
        if dims != (Some(g.rows as u64), Some(g.cols as u64)) {
            return Err(bad("`rows`/`cols` disagree with the tile grid"));
        }
        if labels("north")? != g.north_boundary() || labels("east")? != g.east_boundary() {
            return Err(bad("North/East labels disagree with the traced pipes"));
        }
        Ok(g)
    }
}

impl fmt::Display for Gpd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Whether `g` fills the rectangle of `spec` with allowed tiles and meets
/// every boundary constraint.
pub fn satisfies(g: &Gpd, spec: &BoundarySpec) -> bool {
    let inputs = |cs: &[Constraint]| cs.iter().map(|c| c.input_label()).collect::<Vec<_>>();
    g.rows() == spec.rows
        && g.cols() == spec.cols
        && g.west_boundary() == inputs(&spec.west).as_slice()
        && g.south_boundary() == inputs(&spec.south).as_slice()
        && g.squares().all(|(_, t)| spec.allowed.contains(t))
        && spec.north.iter().zip(g.north_boundary()).all(|(c, e)| c.admits(e))
        && spec.east.iter().zip(g.east_boundary()).all(|(c, e)| c.admits(e))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    North(usize),
    East(usize),
    Anywhere,
}

/// Precomputed boundary data shared by every search over one spec.
#[derive(Debug)]
pub(crate) struct Plan {
    pub(crate) spec: BoundarySpec,
    targets: Vec<Target>,
}

impl Plan {
    pub(crate) fn new(spec: &BoundarySpec) -> Result<Plan, GpdError> {
        spec.validate()?;
        let max_label = spec
            .west
            .iter()
            .chain(&spec.south)
            .chain(&spec.north)
            .chain(&spec.east)
            .filter_map(|c| c.input_label())
            .max()
            .unwrap_or(0) as usize;
        let mut targets = vec![Target::Anywhere; max_label + 1];
        for (j, c) in spec.north.iter().enumerate() {
            if let Constraint::Label(l) = c {
                targets[*l as usize] = Target::North(j);
            }
        }
        for (i, c) in spec.east.iter().enumerate() {
            if let Constraint::Label(l) = c {
                targets[*l as usize] = Target::East(i);
            }
        }
        Ok(Plan { spec: spec.clone(), targets })
    }

    fn target(&self, l: Label) -> Target {
        self.targets.get(l as usize).copied().unwrap_or(Target::Anywhere)
    }

    /// Position `p` of the scan (bottom row first, left to right) as 0-based `(row, col)`.
    pub(crate) fn square(&self, p: usize) -> (usize, usize) {
        let n = self.spec.cols;
        (self.spec.rows - 1 - p / n, p % n)
    }

    pub(crate) fn len(&self) -> usize {
        self.spec.rows * self.spec.cols
    }

    pub(crate) fn west_input(&self, r: usize) -> EdgeLabel {
        self.spec.west[r].input_label()
    }

    pub(crate) fn south_input(&self, c: usize) -> EdgeLabel {
        self.spec.south[c].input_label()
    }

    /// Whether the outputs `(north, east)` of square `(r, c)` (0-based) can
    /// still lead to a filling that meets the boundary.
    pub(crate) fn admits(&self, r: usize, c: usize, north: EdgeLabel, east: EdgeLabel) -> bool {
        let spec = &self.spec;
        if r == 0 {
            if !spec.north[c].admits(north) {
                return false;
            }
        } else if let Some(l) = north {
            match self.target(l) {
                Target::North(t) if c > t => return false,
                Target::East(t) if r - 1 < t => return false,
                _ => {}
            }
        }
        if c + 1 == spec.cols {
            if !spec.east[r].admits(east) {
                return false;
            }
        } else if let Some(l) = east {
            match self.target(l) {
                Target::North(t) if c + 1 > t => return false,
                Target::East(t) if r < t => return false,
                _ => {}
            }
        }
        true
    }

    /// Admissible `(tile, north, east)` choices for square `(r, c)`.
    pub(crate) fn options(&self, r: usize, c: usize, west: EdgeLabel, south: EdgeLabel) -> Options {
        let mut opts = Options::default();
        for (t, n, e) in tile_options(west, south, self.spec.allowed) {
            if self.admits(r, c, n, e) {
                opts.push((t, n, e));
            }
        }
        opts
    }
}

/// At most two choices per square.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Options {
    items: [(Tile, EdgeLabel, EdgeLabel); 2],
    len: u8,
}

impl Options {
    fn push(&mut self, item: (Tile, EdgeLabel, EdgeLabel)) {
        self.items[self.len as usize] = item;
        self.len += 1;
    }

    pub(crate) fn as_slice(&self) -> &[(Tile, EdgeLabel, EdgeLabel)] {
        &self.items[..self.len as usize]
    }
}

impl Default for Tile {
    fn default() -> Self {
        Tile::Blank
    }
}

#[derive(Clone, Debug)]
struct Frame {
    options: Options,
    next: u8,
}

/// Depth-first search state; also the unit of work for parallel shards.
#[derive(Clone, Debug)]
pub struct Gpds {
    plan: Arc<Plan>,
    tiles: Vec<Tile>,
    north_out: Vec<EdgeLabel>,
    east_out: Vec<EdgeLabel>,
    /// Positions already fixed before this search started.
    base: usize,
    /// Search stops (and yields) once this many positions are filled.
    limit: usize,
    stack: Vec<Frame>,
    started: bool,
}

impl Gpds {
    fn new(plan: Arc<Plan>, limit: usize) -> Gpds {
        let size = plan.len();
        Gpds {
            plan,
            tiles: vec![Tile::Blank; size],
            north_out: vec![None; size],
            east_out: vec![None; size],
            base: 0,
            limit,
            stack: Vec::with_capacity(size),
            started: false,
        }
    }

    fn inputs(&self, p: usize) -> (usize, usize, EdgeLabel, EdgeLabel) {
        let (r, c) = self.plan.square(p);
        let n = self.plan.spec.cols;
        let west = if c == 0 { self.plan.west_input(r) } else { self.east_out[r * n + c - 1] };
        let south = if r + 1 == self.plan.spec.rows {
            self.plan.south_input(c)
        } else {
            self.north_out[(r + 1) * n + c]
        };
        (r, c, west, south)
    }

    fn push_frame(&mut self) {
        let p = self.base + self.stack.len();
        let (r, c, w, s) = self.inputs(p);
        let options = self.plan.options(r, c, w, s);
        self.stack.push(Frame { options, next: 0 });
    }

    /// Advances to the next complete assignment of positions `base..limit`.
    fn advance(&mut self) -> bool {
        if !self.started {
            self.started = true;
            if self.base == self.limit {
                return true;
            }
            self.push_frame();
        }
        while let Some(frame) = self.stack.last_mut() {
            if frame.next as usize >= frame.options.as_slice().len() {
                self.stack.pop();
                continue;
            }
            let (t, n, e) = frame.options.as_slice()[frame.next as usize];
            frame.next += 1;
            let p = self.base + self.stack.len() - 1;
            let (r, c) = self.plan.square(p);
            let idx = r * self.plan.spec.cols + c;
            self.tiles[idx] = t;
            self.north_out[idx] = n;
            self.east_out[idx] = e;
            if p + 1 == self.limit {
                return true;
            }
            self.push_frame();
        }
        false
    }

    fn snapshot(&self) -> Gpd {
        let spec = &self.plan.spec;
        Gpd {
            rows: spec.rows,
            cols: spec.cols,
            tiles: self.tiles.clone(),
            west: spec.west.iter().map(|c| c.input_label()).collect(),
            south: spec.south.iter().map(|c| c.input_label()).collect(),
            north_out: self.north_out.clone(),
            east_out: self.east_out.clone(),
        }
    }

    /// Splits the remaining search into independent shards by fixing the
    /// first `depth` squares. Concatenating the shards in order reproduces
    /// the sequential enumeration order.
    fn split(&self, depth: usize) -> Vec<Gpds> {
        let depth = depth.min(self.plan.len());
        let mut prefixes = Gpds::new(Arc::clone(&self.plan), depth);
        let mut out = Vec::new();
        while prefixes.advance() {
            out.push(Gpds {
                plan: Arc::clone(&self.plan),
                tiles: prefixes.tiles.clone(),
                north_out: prefixes.north_out.clone(),
                east_out: prefixes.east_out.clone(),
                base: depth,
                limit: self.plan.len(),
                stack: Vec::with_capacity(self.plan.len()),
                started: false,
            });
            if depth == 0 {
                break;
            }
        }
        out
    }

    /// Number of remaining results, without materialising them.
    pub fn count_remaining(mut self) -> BigUint {
        let mut total = 0u64;
        while self.advance() {
            total += 1;
        }
        BigUint::from(total)
    }
}

impl Iterator for Gpds {
    type Item = Gpd;

    fn next(&mut self) -> Option<Gpd> {
        if self.advance() {
            Some(self.snapshot())
        } else {
            None
        }
    }
}

/// Every filling of `spec`, each once, in scan order (bottom row first,
/// columns left to right, choices ordered as in [`tile_options`]).
pub fn enumerate(spec: &BoundarySpec) -> Result<Gpds, GpdError> {
    let plan = Arc::new(Plan::new(spec)?);
    let len = plan.len();
    Ok(Gpds::new(plan, len))
}

/// Independent pieces of [`enumerate`] suitable for parallel workers.
pub fn shards(spec: &BoundarySpec) -> Result<Vec<Gpds>, GpdError> {
    let all = enumerate(spec)?;
    // One bottom row is plenty to spread work over a handful of threads.
    Ok(all.split(spec.cols.min(all.plan.len())))
}

/// `|enumerate(spec)|`, computed by a streaming search.
pub fn count(spec: &BoundarySpec) -> Result<BigUint, GpdError> {
    Ok(enumerate(spec)?.count_remaining())
}
