//! Robot selection from the terrain a path crosses.
//!
//! Five heterogeneous robots are available, one per terrain class:
//!
//! | terrain         | robot          |
//! |-----------------|----------------|
//! | wall            | robotic lizard |
//! | stairs          | biped          |
//! | cluttered floor | robotic snake  |
//! | slope           | quadruped      |
//! | flat surface    | half-humanoid  |
//!
//! Terrains are totally ordered wall > stairs > clutter > slope > flat, and
//! robots robotic lizard > biped > robotic snake > quadruped > half-humanoid;
//! the table aligns the two orders rank for rank. A mission run by a single
//! robot uses the robot of the highest-priority terrain anywhere on the path
//! (a wall anywhere means the robotic lizard, whatever else is present).
//! Alternatively the path can be segmented into maximal same-terrain runs,
//! each run handled by its own robot.

use std::collections::BTreeSet;
use std::fmt;

use crate::gridmap::{Coord, GridMap, TerrainClass};
use crate::wavefront::Path;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The five available robots, in priority order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Robot {
    RoboticLizard,
    Biped,
    RoboticSnake,
    Quadruped,
    HalfHumanoid,
}

impl Robot {
    pub const ALL: [Robot; 5] = [
        Robot::RoboticLizard,
        Robot::Biped,
        Robot::RoboticSnake,
        Robot::Quadruped,
        Robot::HalfHumanoid,
    ];

    /// Rank in the robot preference order, 1 = highest.
    pub fn priority(self) -> u8 {
        match self {
            Robot::RoboticLizard => 1,
            Robot::Biped => 2,
            Robot::RoboticSnake => 3,
            Robot::Quadruped => 4,
            Robot::HalfHumanoid => 5,
        }
    }
}

impl fmt::Display for Robot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Robot::RoboticLizard => "robotic_lizard",
            Robot::Biped => "biped",
            Robot::RoboticSnake => "robotic_snake",
            Robot::Quadruped => "quadruped",
            Robot::HalfHumanoid => "half_humanoid",
        };
        f.write_str(name)
    }
}

impl TerrainClass {
    /// Rank in the terrain preference order, 1 = highest (wall) through
    /// 5 = lowest (flat).
    pub fn priority(self) -> u8 {
        match self {
            TerrainClass::Wall => 1,
            TerrainClass::Stairs => 2,
            TerrainClass::Clutter => 3,
            TerrainClass::Slope => 4,
            TerrainClass::Flat => 5,
        }
    }

    /// The robot assigned to this terrain.
    pub fn robot(self) -> Robot {
        match self {
            TerrainClass::Wall => Robot::RoboticLizard,
            TerrainClass::Stairs => Robot::Biped,
            TerrainClass::Clutter => Robot::RoboticSnake,
            TerrainClass::Slope => Robot::Quadruped,
            TerrainClass::Flat => Robot::HalfHumanoid,
        }
    }
}

/// Errors from profiling a path or selecting a robot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SelectionError {
    #[error("terrain set is empty")]
    EmptyTerrainSet,

    #[error("path cell {0} is an obstacle")]
    PathCellIsObstacle(Coord),

    #[error("path cell {0} is outside the map")]
    PathCellOutOfBounds(Coord),
}

/// The terrain a path crosses: per-cell sequence plus the set of distinct
/// classes present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerrainProfile {
    /// Terrain of each path cell, in path order.
    pub sequence: Vec<TerrainClass>,
    /// Distinct terrain classes in `sequence`.
    pub present: BTreeSet<TerrainClass>,
}

/// Read the terrain under every cell of `path`.
pub fn terrain_profile(map: &GridMap, path: &Path) -> Result<TerrainProfile, SelectionError> {
    let mut sequence = Vec::with_capacity(path.cell_count());
    for &at in path {
        let cell = map
            .cell(at)
            .ok_or(SelectionError::PathCellOutOfBounds(at))?;
        let terrain = cell
            .terrain()
            .ok_or(SelectionError::PathCellIsObstacle(at))?;
        sequence.push(terrain);
    }
    let present = sequence.iter().copied().collect();
    Ok(TerrainProfile { sequence, present })
}

/// Pick the robot for a whole mission from the set of terrains present.
///
/// Returns the robot of the highest-priority terrain in the set. Because the
/// terrain and robot orders are aligned, this is also the robot of minimal
/// priority rank among the terrains' robots.
pub fn select_robot(present: &BTreeSet<TerrainClass>) -> Result<Robot, SelectionError> {
    present
        .iter()
        .copied()
        .min_by_key(|t| t.priority())
        .map(TerrainClass::robot)
        .ok_or(SelectionError::EmptyTerrainSet)
}

/// One leg of a segmented mission: a self-contained subpath, the run's
/// terrain, and the robot that handles it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanSegment {
    pub path: Path,
    pub terrain: TerrainClass,
    pub robot: Robot,
}

/// Split `path` into maximal runs of equal terrain, one robot per run.
///
/// The handoff between two runs happens at a shared cell: each segment after
/// the first starts at the previous run's last cell, so every robot's
/// subpath is independently executable. Concatenating the subpaths while
/// dropping those duplicated junction cells reproduces `path`.
pub fn segment_plan(map: &GridMap, path: &Path) -> Result<Vec<PlanSegment>, SelectionError> {
    let profile = terrain_profile(map, path)?;
    let coords = path.coords();
    let terrain = &profile.sequence;

    let mut segments = Vec::new();
    let push_run = |run_start: usize, run_end: usize, segments: &mut Vec<PlanSegment>| {
        // reach back one cell to include the junction, except on the first run
        let sub_start = if run_start == 0 { 0 } else { run_start - 1 };
        let run_terrain = terrain[run_start];
        segments.push(PlanSegment {
            path: Path::new(coords[sub_start..run_end].to_vec()),
            terrain: run_terrain,
            robot: run_terrain.robot(),
        });
    };
    let mut run_start = 0;
    for i in 1..coords.len() {
        if terrain[i] != terrain[run_start] {
            push_run(run_start, i, &mut segments);
            run_start = i;
        }
    }
    push_run(run_start, coords.len(), &mut segments);
    Ok(segments)
}

/// Whether a mission is run by one robot or segmented per terrain run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanMode {
    Single,
    Segmented,
}

/// Robot assignment for a planned path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RobotAssignment {
    /// One robot runs the whole path.
    Single(Robot),
    /// One robot per maximal terrain run.
    Segmented(Vec<PlanSegment>),
}

/// A complete mission plan: the path, its terrain profile, and who runs it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Plan {
    pub path: Path,
    pub profile: TerrainProfile,
    pub assignment: RobotAssignment,
}

impl Plan {
    /// Profile `path` on `map` and assign robots per `mode`.
    pub fn build(map: &GridMap, path: Path, mode: PlanMode) -> Result<Plan, SelectionError> {
        let profile = terrain_profile(map, &path)?;
        let assignment = match mode {
            PlanMode::Single => RobotAssignment::Single(select_robot(&profile.present)?),
            PlanMode::Segmented => RobotAssignment::Segmented(segment_plan(map, &path)?),
        };
        Ok(Plan {
            path,
            profile,
            assignment,
        })
    }

    /// Edge count of the planned path.
    pub fn length(&self) -> usize {
        self.path.edge_count()
    }

    pub fn mode(&self) -> PlanMode {
        match self.assignment {
            RobotAssignment::Single(_) => PlanMode::Single,
            RobotAssignment::Segmented(_) => PlanMode::Segmented,
        }
    }
}
