//! Wavefront planner: breadth-first value propagation from the goal and
//! gradient-descent path extraction back from the start.
//!
//! [`expand`] floods the map outward from the goal, stamping each traversable
//! cell with its step distance to the goal (offset by 2, see [`ValueField`]).
//! [`extract_path`] then walks downhill from the start, always stepping to a
//! neighbor whose value is exactly one less, which yields a shortest path.
//! Steps cost 1 at both connectivities; diagonals are not weighted.

use std::collections::VecDeque;

use crate::gridmap::{Connectivity, Coord, GridMap};
use thiserror::Error;

/// Per-cell wave values produced by [`expand`].
///
/// Value encoding: `0` = traversable but not reached, `1` = obstacle,
/// `2` = goal, and `v >= 3` = reached at wave step `v - 2`. Subtracting 2
/// from a reached cell's value gives its step distance to the goal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueField {
    width: usize,
    height: usize,
    values: Vec<u32>,
}

/// Value of a traversable cell the wave never reached.
pub const UNREACHED: u32 = 0;
/// Value stamped on obstacle cells.
pub const OBSTACLE: u32 = 1;
/// Value of the goal cell.
pub const GOAL: u32 = 2;

impl ValueField {
    /// Build a field from raw row-major values.
    ///
    /// Panics if `values.len() != width * height`. [`expand`] is the normal
    /// way to obtain a field; this constructor exists for rendering and
    /// test setups.
    pub fn from_values(width: usize, height: usize, values: Vec<u32>) -> Self {
        assert_eq!(
            values.len(),
            width * height,
            "value count must equal width * height"
        );
        ValueField {
            width,
            height,
            values,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Value at `at`. Panics if `at` is out of bounds.
    pub fn value(&self, at: Coord) -> u32 {
        assert!(
            at.row < self.height && at.col < self.width,
            "coordinate {at} is outside the {}x{} field",
            self.width,
            self.height
        );
        self.values[at.row * self.width + at.col]
    }

    /// Row-major values.
    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Largest value in the field; the farthest reached cell.
    pub fn max_value(&self) -> u32 {
        self.values.iter().copied().max().unwrap_or(UNREACHED)
    }
}

/// An ordered sequence of adjacent cells from start (first) to goal (last).
///
/// Consecutive coordinates are neighbors under the planning connectivity,
/// no coordinate repeats, and none is an obstacle. A single-cell path
/// (start equals goal) has zero edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    coords: Vec<Coord>,
}

impl Path {
    pub(crate) fn new(coords: Vec<Coord>) -> Self {
        debug_assert!(!coords.is_empty());
        Path { coords }
    }

    pub fn coords(&self) -> &[Coord] {
        &self.coords
    }

    /// Number of steps along the path (cells minus one).
    pub fn edge_count(&self) -> usize {
        self.coords.len() - 1
    }

    pub fn cell_count(&self) -> usize {
        self.coords.len()
    }

    pub fn start(&self) -> Coord {
        self.coords[0]
    }

    pub fn goal(&self) -> Coord {
        *self.coords.last().expect("paths are never empty")
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Coord> {
        self.coords.iter()
    }
}

impl<'a> IntoIterator for &'a Path {
    type Item = &'a Coord;
    type IntoIter = std::slice::Iter<'a, Coord>;

    fn into_iter(self) -> Self::IntoIter {
        self.coords.iter()
    }
}

/// Errors from wave expansion and path extraction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum WavefrontError {
    #[error("goal {0} is out of bounds")]
    GoalOutOfBounds(Coord),

    #[error("goal {0} is on an obstacle")]
    GoalOnObstacle(Coord),

    #[error("start {0} is out of bounds")]
    StartOutOfBounds(Coord),

    #[error("start {0} is on an obstacle")]
    StartOnObstacle(Coord),

    #[error("start {0} was not reached by the wave")]
    StartUnreachable(Coord),

    #[error("no path from {start} to {goal}")]
    NoPath { start: Coord, goal: Coord },
}

/// Propagate the wave outward from `goal`.
///
/// The goal gets value 2 and every traversable cell at BFS distance `d`
/// gets `d + 2`. Obstacles are stamped 1, unreachable traversable cells
/// stay 0. Values depend only on distances, so the result is deterministic.
pub fn expand(
    map: &GridMap,
    goal: Coord,
    connectivity: Connectivity,
) -> Result<ValueField, WavefrontError> {
    if !map.in_bounds(goal) {
        return Err(WavefrontError::GoalOutOfBounds(goal));
    }
    if !map.is_traversable(goal) {
        return Err(WavefrontError::GoalOnObstacle(goal));
    }

    let mut values = vec![UNREACHED; map.width() * map.height()];
    for at in map.coords() {
        if !map.is_traversable(at) {
            values[map.index(at)] = OBSTACLE;
        }
    }

    values[map.index(goal)] = GOAL;
    let mut frontier = VecDeque::new();
    frontier.push_back(goal);
    while let Some(at) = frontier.pop_front() {
        let next = values[map.index(at)] + 1;
        for n in map.neighbors(at, connectivity).expect("frontier in bounds") {
            let slot = &mut values[map.index(n)];
            if *slot == UNREACHED {
                *slot = next;
                frontier.push_back(n);
            }
        }
    }

    Ok(ValueField::from_values(map.width(), map.height(), values))
}

/// Descend the value field from `start` to the goal.
///
/// From each cell the path steps to the first neighbor, in the fixed
/// N, E, S, W (then NE, SE, SW, NW) order, whose value is exactly one less
/// than the current cell's, stopping at value 2. The returned path has
/// `value(start) - 2` edges.
///
/// `field` must come from [`expand`] on the same map and connectivity;
/// panics if the descent gets stuck, which cannot happen for a matching
/// field.
pub fn extract_path(
    field: &ValueField,
    map: &GridMap,
    start: Coord,
    connectivity: Connectivity,
) -> Result<Path, WavefrontError> {
    assert_eq!(
        (field.width(), field.height()),
        (map.width(), map.height()),
        "value field dimensions must match the map"
    );
    if !map.in_bounds(start) {
        return Err(WavefrontError::StartOutOfBounds(start));
    }
    if !map.is_traversable(start) {
        return Err(WavefrontError::StartOnObstacle(start));
    }

    let mut value = field.value(start);
    if value < GOAL {
        return Err(WavefrontError::StartUnreachable(start));
    }

    let mut coords = Vec::with_capacity((value - GOAL + 1) as usize);
    let mut at = start;
    coords.push(at);
    while value > GOAL {
        let down = map
            .neighbors(at, connectivity)
            .expect("path stays in bounds")
            .into_iter()
            .find(|&n| field.value(n) == value - 1)
            .expect("expanded fields always admit a descent step");
        at = down;
        value -= 1;
        coords.push(at);
    }
    Ok(Path::new(coords))
}

/// Plan a shortest path from `start` to `goal`: expand, then extract.
///
/// The edge count of the result equals the BFS distance between the
/// endpoints. `start == goal` yields a legal single-cell, zero-edge path.
pub fn plan_path(
    map: &GridMap,
    start: Coord,
    goal: Coord,
    connectivity: Connectivity,
) -> Result<Path, WavefrontError> {
    if !map.in_bounds(start) {
        return Err(WavefrontError::StartOutOfBounds(start));
    }
    if !map.is_traversable(start) {
        return Err(WavefrontError::StartOnObstacle(start));
    }
    let field = expand(map, goal, connectivity)?;
    extract_path(&field, map, start, connectivity).map_err(|e| match e {
        WavefrontError::StartUnreachable(_) => WavefrontError::NoPath { start, goal },
        other => other,
    })
}

/// Plain forward breadth-first distance from `a` to `b`, in steps.
///
/// Returns `None` when `b` cannot be reached. This is a reference
/// implementation kept deliberately independent of [`expand`] — it searches
/// forward from `a` with a visited set and enumerates neighbors itself — so
/// the two can cross-check each other.
pub fn bfs_distance(
    map: &GridMap,
    a: Coord,
    b: Coord,
    connectivity: Connectivity,
) -> Result<Option<u32>, WavefrontError> {
    if !map.in_bounds(a) {
        return Err(WavefrontError::StartOutOfBounds(a));
    }
    if !map.is_traversable(a) {
        return Err(WavefrontError::StartOnObstacle(a));
    }
    if !map.in_bounds(b) {
        return Err(WavefrontError::GoalOutOfBounds(b));
    }
    if !map.is_traversable(b) {
        return Err(WavefrontError::GoalOnObstacle(b));
    }

    let deltas: &[(isize, isize)] = match connectivity {
        Connectivity::Four => &[(-1, 0), (0, 1), (1, 0), (0, -1)],
        Connectivity::Eight => &[
            (-1, 0),
            (0, 1),
            (1, 0),
            (0, -1),
            (-1, 1),
            (1, 1),
            (1, -1),
            (-1, -1),
        ],
    };

    let mut visited = vec![false; map.width() * map.height()];
    visited[map.index(a)] = true;
    let mut frontier = VecDeque::new();
    frontier.push_back((a, 0));
    while let Some((at, dist)) = frontier.pop_front() {
        if at == b {
            return Ok(Some(dist));
        }
        for &(dr, dc) in deltas {
            let row = at.row.checked_add_signed(dr);
            let col = at.col.checked_add_signed(dc);
            if let (Some(row), Some(col)) = (row, col) {
                let n = Coord::new(row, col);
                if map.is_traversable(n) && !visited[map.index(n)] {
                    visited[map.index(n)] = true;
                    frontier.push_back((n, dist + 1));
                }
            }
        }
    }
    Ok(None)
}
