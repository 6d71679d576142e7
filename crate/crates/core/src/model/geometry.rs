use serde::{Deserialize, Serialize};

use crate::error::ModelError;

/// A point inside the vehicle, in meters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point3(pub [f64; 3]);

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Point3([x, y, z])
    }

    pub fn distance_to(&self, other: &Point3) -> f64 {
        let [ax, ay, az] = self.0;
        let [bx, by, bz] = other.0;
        ((ax - bx).powi(2) + (ay - by).powi(2) + (az - bz).powi(2)).sqrt()
    }

    pub fn translated(&self, offset: [f64; 3]) -> Point3 {
        Point3([self.0[0] + offset[0], self.0[1] + offset[1], self.0[2] + offset[2]])
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }
}

/// Placement of the access point, the reflecting panel and the device.
///
/// The vehicle interior is the axis-aligned box `[0, bounds]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VehicleGeometry {
    #[serde(rename = "ap_position_m")]
    pub ap_position: Point3,
    #[serde(rename = "irs_center_m")]
    pub irs_center: Point3,
    #[serde(rename = "device_position_m")]
    pub device_position: Point3,
    #[serde(rename = "vehicle_bounds_m")]
    pub bounds: [f64; 3],
}

impl Default for VehicleGeometry {
    fn default() -> Self {
        VehicleGeometry {
            ap_position: Point3::new(0.5, 1.5, 2.4),
            irs_center: Point3::new(5.0, 0.0, 2.0),
            device_position: Point3::new(3.0, 1.5, 1.0),
            bounds: [10.0, 3.0, 2.5],
        }
    }
}

impl VehicleGeometry {
    pub fn contains(&self, p: &Point3) -> bool {
        p.0.iter()
            .zip(self.bounds.iter())
            .all(|(c, b)| *c >= 0.0 && *c <= *b)
    }
}

/// Distances between the three node pairs, in meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkDistances {
    pub ap_device: f64,
    pub ap_irs: f64,
    pub irs_device: f64,
}

/// Euclidean distances AP↔device, AP↔IRS and IRS↔device.
///
/// Fails when any two of the points coincide.
pub fn link_distances(geometry: &VehicleGeometry) -> Result<LinkDistances, ModelError> {
    let ap_device = geometry.ap_position.distance_to(&geometry.device_position);
    let ap_irs = geometry.ap_position.distance_to(&geometry.irs_center);
    let irs_device = geometry.irs_center.distance_to(&geometry.device_position);

    for (name, d) in [
        ("ap/device", ap_device),
        ("ap/irs", ap_irs),
        ("irs/device", irs_device),
    ] {
        if !(d > 0.0) || !d.is_finite() {
            return Err(ModelError::DegenerateGeometry(name));
        }
    }
    Ok(LinkDistances {
        ap_device,
        ap_irs,
        irs_device,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn geom(ap: [f64; 3], irs: [f64; 3], dev: [f64; 3]) -> VehicleGeometry {
        VehicleGeometry {
            ap_position: Point3(ap),
            irs_center: Point3(irs),
            device_position: Point3(dev),
            bounds: [10.0, 10.0, 10.0],
        }
    }

    #[test]
    fn three_four_five() {
        let d = link_distances(&geom([0.0; 3], [1.0, 1.0, 1.0], [3.0, 4.0, 0.0])).unwrap();
        assert_eq!(d.ap_device, 5.0);
    }

    #[test]
    fn default_ap_device_distance() {
        let d = link_distances(&VehicleGeometry::default()).unwrap();
        // sqrt(2.5^2 + 1.4^2)
        assert_relative_eq!(d.ap_device, 2.8653, epsilon = 1e-4);
        assert_relative_eq!(d.ap_device, 8.21_f64.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn coincident_points_rejected() {
        let err = link_distances(&geom([1.0; 3], [2.0; 3], [1.0; 3])).unwrap_err();
        assert!(matches!(err, ModelError::DegenerateGeometry("ap/device")));
    }

    proptest::proptest! {
        #[test]
        fn translation_invariant(
            a in proptest::array::uniform3(-5.0f64..5.0),
            b in proptest::array::uniform3(-5.0f64..5.0),
            c in proptest::array::uniform3(-5.0f64..5.0),
            off in proptest::array::uniform3(-3.0f64..3.0),
        ) {
            let g = geom(a, b, c);
            let moved = VehicleGeometry {
                ap_position: g.ap_position.translated(off),
                irs_center: g.irs_center.translated(off),
                device_position: g.device_position.translated(off),
                ..g.clone()
            };
            if let (Ok(d0), Ok(d1)) = (link_distances(&g), link_distances(&moved)) {
                proptest::prop_assert!((d0.ap_device - d1.ap_device).abs() < 1e-9);
                proptest::prop_assert!((d0.ap_irs - d1.ap_irs).abs() < 1e-9);
                proptest::prop_assert!((d0.irs_device - d1.irs_device).abs() < 1e-9);
            }
        }

        #[test]
        fn swapping_roles_permutes_distances(
            a in proptest::array::uniform3(-5.0f64..5.0),
            b in proptest::array::uniform3(-5.0f64..5.0),
            c in proptest::array::uniform3(-5.0f64..5.0),
        ) {
            // Swap AP and device: ap_irs and irs_device trade places.
            if let (Ok(d0), Ok(d1)) = (link_distances(&geom(a, b, c)), link_distances(&geom(c, b, a))) {
                proptest::prop_assert_eq!(d0.ap_device, d1.ap_device);
                proptest::prop_assert_eq!(d0.ap_irs, d1.irs_device);
                proptest::prop_assert_eq!(d0.irs_device, d1.ap_irs);
            }
        }
    }
}
