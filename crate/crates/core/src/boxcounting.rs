//! Direct enumeration of box configurations in the corner of the quadrant.
//!
//! Two models are supported:
//!
//! * **one-leg**: an infinite column sits over the origin and `n` boxes are
//!   stacked around it. These are the torus-fixed monomial ideals counted by
//!   `M(q)/(1-q)`.
//! * **plain**: ordinary plane partitions, counted by `M(q)`.
//!
//! Both are described by a height function `h(a, b)` on the quadrant that is
//! weakly decreasing along both axes. The search fills rows `b = 0, 1, ...`
//! one cell at a time, bounding each height by its left neighbour, the cell
//! below it in the previous row and the remaining volume. Counting and
//! enumeration share the same traversal; counting only bumps an integer at
//! each leaf.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use thiserror::Error;

const INFINITE: u32 = u32::MAX;

/// Which box model to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoxModel {
    /// Origin carries an infinite column.
    OneLeg,
    /// Ordinary plane partitions.
    Plain,
}

impl BoxModel {
    pub fn has_leg(self) -> bool {
        matches!(self, BoxModel::OneLeg)
    }
}

/// A lattice point of the quadrant. Ordered by `(b, a)`, the canonical
/// row-major traversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub b: u32,
    pub a: u32,
}

impl Cell {
    pub fn new(a: u32, b: u32) -> Self {
        Cell { b, a }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("height at ({a},{b}) must be positive")]
    ZeroHeight { a: u32, b: u32 },
    #[error("the origin carries the infinite leg and cannot be recorded")]
    OriginInLeg,
    #[error("height at ({a},{b}) exceeds its neighbour")]
    NotMonotone { a: u32, b: u32 },
    #[error("recorded volume {recorded} differs from the sum of heights {actual}")]
    VolumeMismatch { recorded: u64, actual: u64 },
    #[error("malformed configuration text: {0}")]
    Parse(String),
}

/// Finite height function on the quadrant. Absent cells have height 0; in
/// the one-leg model the origin is infinite and never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeightConfig {
    heights: BTreeMap<Cell, u32>,
    leg: bool,
    volume: u64,
}

impl HeightConfig {
    /// Builds and validates a configuration from explicit `(a, b, h)` cells.
    pub fn new(
        cells: impl IntoIterator<Item = (u32, u32, u32)>,
        model: BoxModel,
    ) -> Result<Self, ConfigError> {
        let heights: BTreeMap<Cell, u32> = cells
            .into_iter()
            .map(|(a, b, h)| (Cell::new(a, b), h))
            .collect();
        let volume = heights.values().map(|&h| u64::from(h)).sum();
        let config = HeightConfig {
            heights,
            leg: model.has_leg(),
            volume,
        };
        config.validate()?;
        Ok(config)
    }

    fn from_rows(rows: &[Vec<u32>], model: BoxModel) -> Self {
        let mut heights = BTreeMap::new();
        let mut volume = 0u64;
        for (b, row) in rows.iter().enumerate() {
            for (a, &h) in row.iter().enumerate() {
                if h != INFINITE {
                    heights.insert(Cell::new(a as u32, b as u32), h);
                    volume += u64::from(h);
                }
            }
        }
        HeightConfig {
            heights,
            leg: model.has_leg(),
            volume,
        }
    }

    pub fn model(&self) -> BoxModel {
        if self.leg {
            BoxModel::OneLeg
        } else {
            BoxModel::Plain
        }
    }

    pub fn volume(&self) -> u64 {
        self.volume
    }

    /// Height at `(a, b)`; `None` for the infinite origin of the one-leg model.
    pub fn height(&self, a: u32, b: u32) -> Option<u32> {
        if self.leg && a == 0 && b == 0 {
            return None;
        }
        Some(self.heights.get(&Cell::new(a, b)).copied().unwrap_or(0))
    }

    /// Recorded cells in canonical `(b, a)` order.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.heights.iter().map(|(&c, &h)| (c, h))
    }

    /// Checks positivity, monotonicity along both axes and the volume.
    pub fn validate(&self) -> Result<(), ConfigError> {
        let mut actual = 0u64;
        for (&Cell { a, b }, &h) in &self.heights {
            if self.leg && a == 0 && b == 0 {
                return Err(ConfigError::OriginInLeg);
            }
            if h == 0 {
                return Err(ConfigError::ZeroHeight { a, b });
            }
            let below_ok = |na: u32, nb: u32| self.height(na, nb).is_none_or(|nh| h <= nh);
            if (a >= 1 && !below_ok(a - 1, b)) || (b >= 1 && !below_ok(a, b - 1)) {
                return Err(ConfigError::NotMonotone { a, b });
            }
            actual += u64::from(h);
        }
        if actual != self.volume {
            return Err(ConfigError::VolumeMismatch {
                recorded: self.volume,
                actual,
            });
        }
        Ok(())
    }

    /// Header `n=<volume> leg=<0|1>` followed by one `a b h` line per cell,
    /// sorted by `(b, a)`. Every line ends in a newline.
    pub fn to_canonical_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "n={} leg={}", self.volume, u8::from(self.leg)).unwrap();
        for (Cell { a, b }, h) in self.cells() {
            writeln!(out, "{a} {b} {h}").unwrap();
        }
        out
    }

    /// Inverse of [`HeightConfig::to_canonical_text`].
    pub fn parse_canonical(text: &str) -> Result<Self, ConfigError> {
        let bad = |msg: &str| ConfigError::Parse(msg.to_string());
        let mut lines = text.lines();
        let header = lines.next().ok_or_else(|| bad("empty input"))?;
        let (n_part, leg_part) = header.split_once(' ').ok_or_else(|| bad("bad header"))?;
        let volume: u64 = n_part
            .strip_prefix("n=")
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| bad("bad volume"))?;
        let leg = match leg_part {
            "leg=1" => true,
            "leg=0" => false,
            _ => return Err(bad("bad leg flag")),
        };
        let mut heights = BTreeMap::new();
        for line in lines {
            let nums: Vec<u32> = line
                .split(' ')
                .map(|t| t.parse().map_err(|_| bad(line)))
                .collect::<Result<_, _>>()?;
            let [a, b, h] = nums[..] else {
                return Err(bad(line));
            };
            if heights.insert(Cell::new(a, b), h).is_some() {
                return Err(bad("duplicate cell"));
            }
        }
        let config = HeightConfig {
            heights,
            leg,
            volume,
        };
        config.validate()?;
        Ok(config)
    }
}

impl fmt::Display for HeightConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_text())
    }
}

trait Leaf {
    fn leaf(&mut self, rows: &[Vec<u32>]);
}

struct Counter(u64);

impl Leaf for Counter {
    fn leaf(&mut self, _rows: &[Vec<u32>]) {
        self.0 += 1;
    }
}

struct Search<'a, L> {
    done: Vec<Vec<u32>>,
    row: Vec<u32>,
    sink: &'a mut L,
}

impl<L: Leaf> Search<'_, L> {
    fn run(model: BoxModel, n: u32, sink: &mut L) {
        let row = match model {
            BoxModel::OneLeg => vec![INFINITE],
            BoxModel::Plain => Vec::new(),
        };
        let mut search = Search {
            done: Vec::new(),
            row,
            sink,
        };
        search.step(n);
    }

    fn step(&mut self, remaining: u32) {
        let a = self.row.len();
        let above = match self.done.last() {
            None => INFINITE,
            Some(prev) => prev.get(a).copied().unwrap_or(0),
        };
        let left = self.row.last().copied().unwrap_or(INFINITE);
        let bound = above.min(left).min(remaining);
        for h in (1..=bound).rev() {
            self.row.push(h);
            self.step(remaining - h);
            self.row.pop();
        }
        // Close the current row.
        if self.row.is_empty() {
            if remaining == 0 {
                self.sink.leaf(&self.done);
            }
        } else {
            let row = std::mem::take(&mut self.row);
            self.done.push(row);
            self.step(remaining);
            self.row = self.done.pop().expect("row was just pushed");
        }
    }
}

struct Visitor<F> {
    model: BoxModel,
    f: F,
}

impl<F: FnMut(HeightConfig)> Leaf for Visitor<F> {
    fn leaf(&mut self, rows: &[Vec<u32>]) {
        (self.f)(HeightConfig::from_rows(rows, self.model));
    }
}

/// Streams every configuration of volume `n` to `f`, in the same order as
/// [`enumerate`].
pub fn for_each_config(model: BoxModel, n: u32, f: impl FnMut(HeightConfig)) {
    let mut sink = Visitor { model, f };
    Search::run(model, n, &mut sink);
}

/// Every configuration of volume `n` in the given model, in a fixed order.
pub fn enumerate(model: BoxModel, n: u32) -> Vec<HeightConfig> {
    let mut out = Vec::new();
    for_each_config(model, n, |c| out.push(c));
    out
}

/// Number of configurations of volume `n`, without materializing them.
pub fn count(model: BoxModel, n: u32) -> u64 {
    let mut sink = Counter(0);
    Search::run(model, n, &mut sink);
    sink.0
}

/// Torus-fixed points of the local model of volume `n`.
pub fn enumerate_one_leg(n: u32) -> Vec<HeightConfig> {
    enumerate(BoxModel::OneLeg, n)
}

/// `χ(M_n)`: the number of one-leg configurations of volume `n`.
pub fn count_one_leg(n: u32) -> u64 {
    count(BoxModel::OneLeg, n)
}

pub fn count_plane_partitions(n: u32) -> u64 {
    count(BoxModel::Plain, n)
}

/// Signed count `(-1)^n χ(M_n)`.
pub fn local_model_dt(n: u32) -> i128 {
    let c = i128::from(count_one_leg(n));
    if n.is_multiple_of(2) {
        c
    } else {
        -c
    }
}
