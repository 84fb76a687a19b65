//! Britton reduction for the HNN towers and the amalgam inside G4.
//!
//! G4 is handled two independent ways: as an HNN extension of E with stable
//! letter `b` over `K = ⟨a,c,d⟩`, and as a multiple HNN extension of
//! `L = ⟨b,c⟩ × ... ∗ ⟨s⟩` with stable letters `a` and `d`.

use crate::word::Letter;

pub mod a;
pub mod b;
pub mod e;
pub mod fold;
pub mod g4;
pub mod l;
pub mod runword;

pub use fold::{fold, SubgroupGraph};
pub use runword::RunWord;

/// An HNN extension presented through its base group and pinch rule.
pub trait Hnn {
    type Base: Clone + std::fmt::Debug;

    fn is_stable(&self, l: Letter) -> bool;
    fn base_identity(&self) -> Self::Base;
    fn base_letter(&self, l: Letter) -> Self::Base;
    fn base_mul(&self, x: &Self::Base, y: &Self::Base) -> Self::Base;
    fn base_is_identity(&self, x: &Self::Base) -> bool;
    /// Image of `t g t⁻¹` when `g` lies in the associated subgroup of `t`.
    fn pinch(&self, t: Letter, g: &Self::Base) -> Option<Self::Base>;
}

/// `head t₁ g₁ t₂ g₂ …` with no pinch left.
#[derive(Clone, Debug)]
pub struct BrittonWord<B> {
    pub head: B,
    pub tail: Vec<(Letter, B)>,
}

impl<B> BrittonWord<B> {
    pub fn stable_count(&self) -> usize {
        self.tail.len()
    }
}

/// Stack-based reduction; a pinch is collapsed as soon as its closing stable
/// letter arrives, so innermost pinches go first.
pub fn britton_reduce<H: Hnn>(h: &H, letters: impl IntoIterator<Item = Letter>) -> BrittonWord<H::Base> {
    let mut bw = BrittonWord { head: h.base_identity(), tail: Vec::new() };
    for l in letters {
        push_letter(h, &mut bw, l);
    }
    bw
}

pub fn push_letter<H: Hnn>(h: &H, bw: &mut BrittonWord<H::Base>, l: Letter) {
    if !h.is_stable(l) {
        let x = h.base_letter(l);
        let cur = match bw.tail.last_mut() {
            Some((_, g)) => g,
            None => &mut bw.head,
        };
        *cur = h.base_mul(cur, &x);
        return;
    }
    if let Some((t, g)) = bw.tail.last() {
        if *t == l.inverse() {
            if let Some(img) = h.pinch(*t, g) {
                bw.tail.pop();
                let cur = match bw.tail.last_mut() {
                    Some((_, g)) => g,
                    None => &mut bw.head,
                };
                *cur = h.base_mul(cur, &img);
                return;
            }
        }
    }
    bw.tail.push((l, h.base_identity()));
}

pub fn hnn_is_identity<H: Hnn>(h: &H, letters: impl IntoIterator<Item = Letter>) -> bool {
    let bw = britton_reduce(h, letters);
    bw.tail.is_empty() && h.base_is_identity(&bw.head)
}
