use braid_core::{BraidWord, HalfInteger};
use serde::{Deserialize, Serialize};

use crate::embedded::EmbeddedBandWord;
use crate::error::SurfaceError;
use crate::quasipositive::QPBandWord;
use crate::ToBraidWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SurfaceKind {
    /// Seifert surface in the three-sphere built from an embedded bandword.
    Bennequin,
    /// Ribbon surface in the four-ball built from a quasipositive bandword.
    Ribbon,
}

/// Euler characteristic and genus of a surface made of `n` disks and `c` bands.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceSummary {
    pub kind: SurfaceKind,
    pub strands: usize,
    pub handles: usize,
    pub components: usize,
    pub euler_characteristic: i64,
    /// Connected pieces of the surface; 1 unless the bands leave some disks apart.
    pub surface_components: usize,
    /// `(2s − k − χ)/2` with `s` surface pieces. For ribbon surfaces this is the slice genus and is
    /// only reported when the boundary is a knot. For ribbon surfaces this is the slice genus and is
    /// only reported when the boundary is a knot.
    pub genus: Option<HalfInteger>,
}

impl SurfaceSummary {
    fn build(
        kind: SurfaceKind,
        strands: usize,
        handles: usize,
        components: usize,
        pieces: usize,
    ) -> Result<Self, SurfaceError> {
        let chi = strands as i64 - handles as i64;
        let twice = 2 * pieces as i64 - components as i64 - chi;
        if twice < 0 {
            return Err(SurfaceError::Inconsistent { chi, components });
        }
        Ok(SurfaceSummary {
            kind,
            strands,
            handles,
            components,
            euler_characteristic: chi,
            surface_components: pieces,
            genus: Some(HalfInteger::from_twice(twice)),
        })
    }
}

pub fn bennequin_summary(w: &EmbeddedBandWord) -> Result<SurfaceSummary, SurfaceError> {
    let k = w.to_braid_word().closure_summary().components;
    let pieces = disk_clusters(w.strands(), w.letters().iter().map(|l| (l.i, l.j)));
    SurfaceSummary::build(SurfaceKind::Bennequin, w.strands(), w.len(), k, pieces)
}

/// Connected components of the graph on disks `1..=n` with one edge per band.
fn disk_clusters(n: usize, bands: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut pieces = n;
    for (i, j) in bands {
        let (a, b) = (root(&mut parent, i), root(&mut parent, j));
        if a != b {
            parent[a] = b;
            pieces -= 1;
        }
    }
    pieces
}

/// Ribbon surface data; for a knot the genus is the sharp slice genus
/// `(c − n + 1)/2`.
pub fn qp_ribbon_summary(w: &QPBandWord) -> SurfaceSummary {
    let k = w.to_braid_word().closure_summary().components;
    let chi = w.strands() as i64 - w.band_count() as i64;
    // band w σ_k w⁻¹ joins the disks whose strands w carries to positions k, k+1
    let ends = w.bands().iter().map(|b| {
        let back = BraidWord::new(w.strands(), b.conjugator.clone())
            .expect("bands are validated")
            .permutation()
            .inverse();
        (back.apply(b.index - 1) + 1, back.apply(b.index) + 1)
    });
    let pieces = disk_clusters(w.strands(), ends);
    let genus = (k == 1).then(|| HalfInteger::from_twice(1 - chi));
    SurfaceSummary {
        kind: SurfaceKind::Ribbon,
        strands: w.strands(),
        handles: w.band_count(),
        components: k,
        euler_characteristic: chi,
        surface_components: pieces,
        genus,
    }
}
