//! Grid map data model and the text map format.
//!
//! Maps are rectangular grids of cells. A cell is either a hard obstacle
//! (impassable for every robot) or traversable with one of five terrain
//! classes. The text format is one character per cell, rows separated by a
//! single line feed, with an optional single trailing line feed:
//!
//! | char | meaning              |
//! |------|----------------------|
//! | `.`  | flat surface         |
//! | `~`  | slope                |
//! | `*`  | cluttered floor      |
//! | `H`  | stairs               |
//! | `W`  | wall (climbable)     |
//! | `#`  | obstacle             |
//! | `A`  | start marker (flat)  |
//! | `B`  | goal marker (flat)   |
//!
//! No other characters are accepted — no spaces, no tabs. Note that walls
//! are traversable terrain (the robotic lizard climbs them); `#` is the only
//! cell no robot can enter.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

/// Surface category of a traversable cell.
///
/// Declaration order matches the terrain priority order (wall first, flat
/// last), so sorted collections iterate from highest to lowest priority.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TerrainClass {
    Wall,
    Stairs,
    Clutter,
    Slope,
    Flat,
}

impl TerrainClass {
    /// All five terrain classes, in priority order.
    pub const ALL: [TerrainClass; 5] = [
        TerrainClass::Wall,
        TerrainClass::Stairs,
        TerrainClass::Clutter,
        TerrainClass::Slope,
        TerrainClass::Flat,
    ];
}

impl fmt::Display for TerrainClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            TerrainClass::Wall => "wall",
            TerrainClass::Stairs => "stairs",
            TerrainClass::Clutter => "clutter",
            TerrainClass::Slope => "slope",
            TerrainClass::Flat => "flat",
        };
        f.write_str(name)
    }
}

/// One cell of a grid map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cell {
    /// Impassable for every robot.
    Obstacle,
    /// Passable ground of the given terrain class.
    Traversable(TerrainClass),
}

impl Cell {
    pub fn is_obstacle(self) -> bool {
        matches!(self, Cell::Obstacle)
    }

    /// Terrain of a traversable cell, `None` for obstacles.
    pub fn terrain(self) -> Option<TerrainClass> {
        match self {
            Cell::Obstacle => None,
            Cell::Traversable(t) => Some(t),
        }
    }
}

/// Grid position: 0-based (row, col), row 0 at the top, col 0 at the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Coord {
    pub row: usize,
    pub col: usize,
}

impl Coord {
    pub fn new(row: usize, col: usize) -> Self {
        Coord { row, col }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row, self.col)
    }
}

/// Neighborhood used for planning: the 4 orthogonal neighbors, or those plus
/// the 4 diagonals. Steps cost 1 either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connectivity {
    Four,
    Eight,
}

impl Connectivity {
    /// Number of neighbors a cell can have at most.
    pub fn degree(self) -> usize {
        match self {
            Connectivity::Four => 4,
            Connectivity::Eight => 8,
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.degree())
    }
}

// Neighbor offsets in the fixed scan order. Every operation that walks a
// neighborhood uses this order, which is what makes planning deterministic.
const ORTHOGONAL: [(isize, isize); 4] = [(-1, 0), (0, 1), (1, 0), (0, -1)]; // N E S W
const DIAGONAL: [(isize, isize); 4] = [(-1, 1), (1, 1), (1, -1), (-1, -1)]; // NE SE SW NW

/// Errors from reading the text map format.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("map text is empty")]
    EmptyMap,

    #[error("row {row} has length {got}, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        got: usize,
    },

    #[error("unknown map character {ch:?} at row {row}, col {col}")]
    UnknownChar { ch: char, row: usize, col: usize },

    #[error("duplicate {marker:?} marker at row {row}, col {col}")]
    DuplicateMarker { marker: char, row: usize, col: usize },
}

/// Coordinate outside the map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("coordinate {at} is outside the {width}x{height} map")]
pub struct OutOfBounds {
    pub at: Coord,
    pub width: usize,
    pub height: usize,
}

/// A rectangular grid of cells with optional start/goal markers.
///
/// Immutable after construction; all queries are pure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridMap {
    width: usize,
    height: usize,
    cells: Vec<Cell>,
    start: Option<Coord>,
    goal: Option<Coord>,
}

impl GridMap {
    /// Parse the text map format.
    ///
    /// Rows must all have the same length. At most one `A` and one `B` are
    /// allowed; both markers parse as traversable flat cells and their
    /// positions are recorded as start/goal.
    pub fn from_text(text: &str) -> Result<Self, ParseError> {
        let body = text.strip_suffix('\n').unwrap_or(text);
        if body.is_empty() {
            return Err(ParseError::EmptyMap);
        }

        let mut width = 0;
        let mut height = 0;
        let mut cells = Vec::new();
        let mut start = None;
        let mut goal = None;

        for (row, line) in body.split('\n').enumerate() {
            let len = line.chars().count();
            if row == 0 {
                if len == 0 {
                    return Err(ParseError::EmptyMap);
                }
                width = len;
            } else if len != width {
                return Err(ParseError::RaggedRows {
                    row,
                    expected: width,
                    got: len,
                });
            }

            for (col, ch) in line.chars().enumerate() {
                let cell = match ch {
                    '.' => Cell::Traversable(TerrainClass::Flat),
                    '~' => Cell::Traversable(TerrainClass::Slope),
                    '*' => Cell::Traversable(TerrainClass::Clutter),
                    'H' => Cell::Traversable(TerrainClass::Stairs),
                    'W' => Cell::Traversable(TerrainClass::Wall),
                    '#' => Cell::Obstacle,
                    'A' => {
                        if start.is_some() {
                            return Err(ParseError::DuplicateMarker {
                                marker: 'A',
                                row,
                                col,
                            });
                        }
                        start = Some(Coord::new(row, col));
                        Cell::Traversable(TerrainClass::Flat)
                    }
                    'B' => {
                        if goal.is_some() {
                            return Err(ParseError::DuplicateMarker {
                                marker: 'B',
                                row,
                                col,
                            });
                        }
                        goal = Some(Coord::new(row, col));
                        Cell::Traversable(TerrainClass::Flat)
                    }
                    other => {
                        return Err(ParseError::UnknownChar {
                            ch: other,
                            row,
                            col,
                        })
                    }
                };
                cells.push(cell);
            }
            height = row + 1;
        }

        Ok(GridMap {
            width,
            height,
            cells,
            start,
            goal,
        })
    }

    /// Render back to the text format, with a single trailing line feed.
    ///
    /// Marker positions serialize as `A`/`B`; parsing the output yields a map
    /// equal to this one.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity((self.width + 1) * self.height);
        for row in 0..self.height {
            for col in 0..self.width {
                let at = Coord::new(row, col);
                let ch = if self.start == Some(at) {
                    'A'
                } else if self.goal == Some(at) {
                    'B'
                } else {
                    match self.cells[self.index(at)] {
                        Cell::Obstacle => '#',
                        Cell::Traversable(TerrainClass::Flat) => '.',
                        Cell::Traversable(TerrainClass::Slope) => '~',
                        Cell::Traversable(TerrainClass::Clutter) => '*',
                        Cell::Traversable(TerrainClass::Stairs) => 'H',
                        Cell::Traversable(TerrainClass::Wall) => 'W',
                    }
                };
                out.push(ch);
            }
            out.push('\n');
        }
        out
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    /// Start marker position (`A`), if the map has one.
    pub fn start(&self) -> Option<Coord> {
        self.start
    }

    /// Goal marker position (`B`), if the map has one.
    pub fn goal(&self) -> Option<Coord> {
        self.goal
    }

    pub fn in_bounds(&self, at: Coord) -> bool {
        at.row < self.height && at.col < self.width
    }

    /// Cell at `at`, or `None` if out of bounds.
    pub fn cell(&self, at: Coord) -> Option<Cell> {
        if self.in_bounds(at) {
            Some(self.cells[self.index(at)])
        } else {
            None
        }
    }

    /// Terrain at `at`; `None` for obstacles and out-of-bounds coordinates.
    pub fn terrain(&self, at: Coord) -> Option<TerrainClass> {
        self.cell(at).and_then(Cell::terrain)
    }

    pub fn is_traversable(&self, at: Coord) -> bool {
        matches!(self.cell(at), Some(Cell::Traversable(_)))
    }

    /// All coordinates in row-major order.
    pub fn coords(&self) -> impl Iterator<Item = Coord> + '_ {
        (0..self.height).flat_map(move |row| (0..self.width).map(move |col| Coord::new(row, col)))
    }

    /// In-bounds, non-obstacle neighbors of `at`, in the fixed order
    /// N, E, S, W (then NE, SE, SW, NW at connectivity 8). Cells off the map
    /// edge are omitted. The query cell itself is never included.
    pub fn neighbors(
        &self,
        at: Coord,
        connectivity: Connectivity,
    ) -> Result<Vec<Coord>, OutOfBounds> {
        if !self.in_bounds(at) {
            return Err(OutOfBounds {
                at,
                width: self.width,
                height: self.height,
            });
        }
        let mut out = Vec::with_capacity(connectivity.degree());
        let mut scan = |offsets: &[(isize, isize)]| {
            for &(dr, dc) in offsets {
                let row = at.row.checked_add_signed(dr);
                let col = at.col.checked_add_signed(dc);
                if let (Some(row), Some(col)) = (row, col) {
                    let n = Coord::new(row, col);
                    if self.is_traversable(n) {
                        out.push(n);
                    }
                }
            }
        };
        scan(&ORTHOGONAL);
        if connectivity == Connectivity::Eight {
            scan(&DIAGONAL);
        }
        Ok(out)
    }

    pub(crate) fn index(&self, at: Coord) -> usize {
        at.row * self.width + at.col
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_markers_and_flat_cells() {
        let map = GridMap::from_text("B.A").unwrap();
        assert_eq!((map.width(), map.height()), (3, 1));
        assert_eq!(map.goal(), Some(Coord::new(0, 0)));
        assert_eq!(map.start(), Some(Coord::new(0, 2)));
        for at in map.coords() {
            assert_eq!(map.terrain(at), Some(TerrainClass::Flat));
        }
    }

    #[test]
    fn parses_obstacles() {
        let map = GridMap::from_text("B#A").unwrap();
        assert_eq!(map.cell(Coord::new(0, 1)), Some(Cell::Obstacle));
        assert!(!map.is_traversable(Coord::new(0, 1)));
    }

    #[test]
    fn parses_every_terrain_char() {
        let map = GridMap::from_text("W~*\nH.#").unwrap();
        assert_eq!(map.terrain(Coord::new(0, 0)), Some(TerrainClass::Wall));
        assert_eq!(map.terrain(Coord::new(0, 1)), Some(TerrainClass::Slope));
        assert_eq!(map.terrain(Coord::new(0, 2)), Some(TerrainClass::Clutter));
        assert_eq!(map.terrain(Coord::new(1, 0)), Some(TerrainClass::Stairs));
        assert_eq!(map.terrain(Coord::new(1, 1)), Some(TerrainClass::Flat));
        assert_eq!(map.cell(Coord::new(1, 2)), Some(Cell::Obstacle));
        assert_eq!(map.start(), None);
        assert_eq!(map.goal(), None);
    }

    #[test]
    fn ragged_rows_rejected() {
        assert_eq!(
            GridMap::from_text("BA\n#"),
            Err(ParseError::RaggedRows {
                row: 1,
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn empty_input_rejected() {
        assert_eq!(GridMap::from_text(""), Err(ParseError::EmptyMap));
        assert_eq!(GridMap::from_text("\n"), Err(ParseError::EmptyMap));
    }

    #[test]
    fn unknown_char_reported_with_position() {
        assert_eq!(
            GridMap::from_text("..\n.x"),
            Err(ParseError::UnknownChar {
                ch: 'x',
                row: 1,
                col: 1
            })
        );
        // spaces and tabs are not part of the alphabet
        assert!(matches!(
            GridMap::from_text(". ."),
            Err(ParseError::UnknownChar { ch: ' ', .. })
        ));
    }

    #[test]
    fn duplicate_markers_rejected() {
        assert_eq!(
            GridMap::from_text("A.A"),
            Err(ParseError::DuplicateMarker {
                marker: 'A',
                row: 0,
                col: 2
            })
        );
        assert_eq!(
            GridMap::from_text("B\nB"),
            Err(ParseError::DuplicateMarker {
                marker: 'B',
                row: 1,
                col: 0
            })
        );
    }

    #[test]
    fn serialize_appends_trailing_newline() {
        let map = GridMap::from_text("B.A").unwrap();
        assert_eq!(map.to_text(), "B.A\n");
    }

    #[test]
    fn round_trip_is_byte_identical() {
        for text in ["B.A\n", "W~*\nH.#\n", "A#B\n..#\n~~*\n"] {
            let map = GridMap::from_text(text).unwrap();
            assert_eq!(map.to_text(), text);
            assert_eq!(GridMap::from_text(&map.to_text()).unwrap(), map);
        }
        // input without the trailing newline round-trips modulo that newline
        let map = GridMap::from_text("W~*\nH.#").unwrap();
        assert_eq!(map.to_text(), "W~*\nH.#\n");
    }

    #[test]
    fn neighbor_order_is_n_e_s_w() {
        let map = GridMap::from_text("...\n...\n...").unwrap();
        let n = map
            .neighbors(Coord::new(1, 1), Connectivity::Four)
            .unwrap();
        assert_eq!(
            n,
            vec![
                Coord::new(0, 1),
                Coord::new(1, 2),
                Coord::new(2, 1),
                Coord::new(1, 0)
            ]
        );
    }

    #[test]
    fn neighbor_order_extends_ne_se_sw_nw() {
        let map = GridMap::from_text("...\n...\n...").unwrap();
        let n = map
            .neighbors(Coord::new(1, 1), Connectivity::Eight)
            .unwrap();
        assert_eq!(
            n,
            vec![
                Coord::new(0, 1),
                Coord::new(1, 2),
                Coord::new(2, 1),
                Coord::new(1, 0),
                Coord::new(0, 2),
                Coord::new(2, 2),
                Coord::new(2, 0),
                Coord::new(0, 0)
            ]
        );
    }

    #[test]
    fn neighbors_clip_at_map_edge() {
        let map = GridMap::from_text("B.A").unwrap();
        let n = map
            .neighbors(Coord::new(0, 0), Connectivity::Four)
            .unwrap();
        assert_eq!(n, vec![Coord::new(0, 1)]);
    }

    #[test]
    fn neighbors_omit_obstacles() {
        let map = GridMap::from_text("B#A").unwrap();
        let n = map
            .neighbors(Coord::new(0, 0), Connectivity::Four)
            .unwrap();
        assert!(n.is_empty());
    }

    #[test]
    fn neighbors_out_of_bounds_query_errors() {
        let map = GridMap::from_text("B.A").unwrap();
        let err = map
            .neighbors(Coord::new(1, 0), Connectivity::Four)
            .unwrap_err();
        assert_eq!(err.at, Coord::new(1, 0));
        assert_eq!((err.width, err.height), (3, 1));
    }
}
