//! The JSON plan document emitted on standard output.
//!
//! Field order is fixed by the struct, so identical inputs always serialize
//! to identical bytes. `schema_version` is bumped on breaking changes.

use serde::{Deserialize, Serialize};
use waveplan_core::{
    Connectivity, Coord, GridMap, Plan, PlanMode, Robot, RobotAssignment, TerrainClass,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanStatus {
    Ok,
    NoPath,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDims {
    pub width: usize,
    pub height: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentDocument {
    pub cells: Vec<Coord>,
    pub terrain: TerrainClass,
    pub robot: Robot,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanDocument {
    pub schema_version: u32,
    pub status: PlanStatus,
    pub map: MapDims,
    pub start: Coord,
    pub goal: Coord,
    pub connectivity: u8,
    pub mode: PlanMode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path: Option<Vec<Coord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terrain_sequence: Option<Vec<TerrainClass>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terrain_set: Option<Vec<TerrainClass>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub robot: Option<Robot>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub segments: Option<Vec<SegmentDocument>>,
}

impl PlanDocument {
    pub fn from_plan(map: &GridMap, plan: &Plan, connectivity: Connectivity) -> Self {
        let mut terrain_set: Vec<TerrainClass> = plan.profile.present.iter().copied().collect();
        terrain_set.sort_by_key(|t| t.priority());
        let (robot, segments) = match &plan.assignment {
            RobotAssignment::Single(robot) => (Some(*robot), None),
            RobotAssignment::Segmented(segments) => (
                None,
                Some(
                    segments
                        .iter()
                        .map(|s| SegmentDocument {
                            cells: s.path.coords().to_vec(),
                            terrain: s.terrain,
                            robot: s.robot,
                        })
                        .collect(),
                ),
            ),
        };
        PlanDocument {
            schema_version: SCHEMA_VERSION,
            status: PlanStatus::Ok,
            map: MapDims {
                width: map.width(),
                height: map.height(),
            },
            start: plan.path.start(),
            goal: plan.path.goal(),
            connectivity: connectivity.degree() as u8,
            mode: plan.mode(),
            length: Some(plan.length()),
            path: Some(plan.path.coords().to_vec()),
            terrain_sequence: Some(plan.profile.sequence.clone()),
            terrain_set: Some(terrain_set),
            robot,
            segments,
        }
    }

    pub fn no_path(
        map: &GridMap,
        start: Coord,
        goal: Coord,
        connectivity: Connectivity,
        mode: PlanMode,
    ) -> Self {
        PlanDocument {
            schema_version: SCHEMA_VERSION,
            status: PlanStatus::NoPath,
            map: MapDims {
                width: map.width(),
                height: map.height(),
            },
            start,
            goal,
            connectivity: connectivity.degree() as u8,
            mode,
            length: None,
            path: None,
            terrain_sequence: None,
            terrain_set: None,
            robot: None,
            segments: None,
        }
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut json =
            serde_json::to_string_pretty(self).expect("plan documents always serialize");
        json.push('\n');
        json
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use waveplan_core::plan_path;

    #[test]
    fn single_mode_document_shape() {
        let map = GridMap::from_text("B.A").unwrap();
        let path = plan_path(
            &map,
            map.start().unwrap(),
            map.goal().unwrap(),
            Connectivity::Four,
        )
        .unwrap();
        let plan = Plan::build(&map, path, PlanMode::Single).unwrap();
        let doc = PlanDocument::from_plan(&map, &plan, Connectivity::Four);
        assert_eq!(doc.status, PlanStatus::Ok);
        assert_eq!(doc.length, Some(2));
        assert_eq!(doc.robot, Some(Robot::HalfHumanoid));
        assert_eq!(doc.segments, None);

        let value: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(value["schema_version"], 1);
        assert_eq!(value["status"], "ok");
        assert_eq!(value["robot"], "half_humanoid");
        assert_eq!(value["mode"], "single");
        assert_eq!(value["path"][0]["row"], 0);
        assert_eq!(value["path"][0]["col"], 2);
        assert!(value.get("segments").is_none());
    }

    #[test]
    fn segmented_mode_lists_segments_instead_of_a_robot() {
        let map = GridMap::from_text("AWB").unwrap();
        let path = plan_path(
            &map,
            map.start().unwrap(),
            map.goal().unwrap(),
            Connectivity::Four,
        )
        .unwrap();
        let plan = Plan::build(&map, path, PlanMode::Segmented).unwrap();
        let doc = PlanDocument::from_plan(&map, &plan, Connectivity::Four);
        assert_eq!(doc.robot, None);
        let segments = doc.segments.as_ref().unwrap();
        assert_eq!(segments.len(), 3);
        assert_eq!(segments[1].robot, Robot::RoboticLizard);
        // terrain set is ordered by priority
        assert_eq!(
            doc.terrain_set,
            Some(vec![TerrainClass::Wall, TerrainClass::Flat])
        );
    }

    #[test]
    fn no_path_document_omits_plan_fields() {
        let map = GridMap::from_text("B#A").unwrap();
        let doc = PlanDocument::no_path(
            &map,
            map.start().unwrap(),
            map.goal().unwrap(),
            Connectivity::Four,
            PlanMode::Single,
        );
        let value: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(value["status"], "no_path");
        assert!(value.get("path").is_none());
        assert!(value.get("robot").is_none());
        assert_eq!(value["map"]["width"], 3);
    }

    #[test]
    fn documents_round_trip_through_json() {
        let map = GridMap::from_text("A~B").unwrap();
        let path = plan_path(
            &map,
            map.start().unwrap(),
            map.goal().unwrap(),
            Connectivity::Four,
        )
        .unwrap();
        let plan = Plan::build(&map, path, PlanMode::Single).unwrap();
        let doc = PlanDocument::from_plan(&map, &plan, Connectivity::Four);
        let reread: PlanDocument = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(reread, doc);
    }
}
