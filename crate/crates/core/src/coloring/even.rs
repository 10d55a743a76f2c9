use crate::error::{Error, Result};
use crate::model::{Coloring, Ring};

/// Colours an even ring without rearrangement: odd-numbered sectors (1-based)
/// take colours from the bottom, `0, 1, ...`, even-numbered sectors from the
/// top, `m-1, m-2, ...`. Adjacent sectors never collide because their sizes
/// sum to at most `m`.
pub fn color_even_ring(ring: &Ring) -> Result<Coloring> {
    let m = ring.m();
    if !m.is_multiple_of(2) {
        return Err(Error::NotEven(m));
    }
    let mut coloring = Coloring::new();
    for (i, sector) in ring.sectors().iter().enumerate() {
        for (k, v) in sector.iter().enumerate() {
            let color = if i % 2 == 0 { k } else { m - 1 - k };
            coloring.insert(v.clone(), color);
        }
    }
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{RingProfile, VertexId};
    use crate::oracle::{graph_of_ring, verify_coloring};

    fn ring(v: &[usize]) -> Ring {
        Ring::from_profile(&RingProfile::new(v.to_vec()).unwrap())
    }

    fn sector_colors(c: &Coloring, r: &Ring, i: usize) -> Vec<usize> {
        r.sector(i).iter().map(|v| c.get(v).unwrap()).collect()
    }

    #[test]
    fn balanced_four() {
        let r = ring(&[2; 4]);
        let c = color_even_ring(&r).unwrap();
        assert_eq!(sector_colors(&c, &r, 0), vec![0, 1]);
        assert_eq!(sector_colors(&c, &r, 1), vec![3, 2]);
        assert_eq!(sector_colors(&c, &r, 2), vec![0, 1]);
        assert_eq!(sector_colors(&c, &r, 3), vec![3, 2]);
    }

    #[test]
    fn balanced_six() {
        let r = ring(&[3; 6]);
        let c = color_even_ring(&r).unwrap();
        assert_eq!(sector_colors(&c, &r, 0), vec![0, 1, 2]);
        assert_eq!(sector_colors(&c, &r, 1), vec![5, 4, 3]);
        assert_eq!(c.get(&VertexId::sector(5, 2)), Some(3));
    }

    #[test]
    fn lopsided_four_is_proper() {
        let r = ring(&[1, 3, 1, 3]);
        let c = color_even_ring(&r).unwrap();
        assert!(verify_coloring(&graph_of_ring(&r), &c, 4).proper);
    }

    #[test]
    fn odd_ring_is_refused() {
        assert!(matches!(
            color_even_ring(&ring(&[1; 5])),
            Err(Error::NotEven(5))
        ));
    }
}
