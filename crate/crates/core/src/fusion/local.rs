use std::collections::HashMap;
use std::sync::Arc;

use crate::error::Result;
use crate::group::{Action, ConjClass, Group, Idx, Subgroup};
use crate::modular::{irr_with_defects, LabeledIrrSet};

/// φ_g(x): the automorphism of Q attached to an element g of Out_F(Q)
/// (well defined up to inner automorphisms), applied to x ∈ Q.
pub type AutHook = Arc<dyn Fn(Idx, Idx) -> Idx + Send + Sync>;

/// A centric subgroup Q together with Out_F(Q) and its action on Q.
#[derive(Clone)]
pub struct LocalData {
    pub label: String,
    /// group containing Q
    pub parent: Arc<Group>,
    pub q: Subgroup,
    pub out: Arc<Group>,
    pub p: u64,
    /// Out_F(Q) is declared to lie between SL₂(p) and GL₂(p)
    pub sl_tagged: bool,
    pub is_radical: bool,
    aut: AutHook,
}

impl std::fmt::Debug for LocalData {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LocalData")
            .field("label", &self.label)
            .field("q", &self.q.order())
            .field("out", &self.out.order())
            .field("is_radical", &self.is_radical)
            .finish()
    }
}

impl LocalData {
    pub fn new(
        label: String,
        parent: Arc<Group>,
        q: Subgroup,
        out: Arc<Group>,
        p: u64,
        sl_tagged: bool,
        aut: AutHook,
    ) -> Self {
        let is_radical = out.p_core(&out.whole(), p).is_trivial();
        LocalData { label, parent, q, out, p, sl_tagged, is_radical, aut }
    }

    pub fn apply(&self, g: Idx, x: Idx) -> Idx {
        (self.aut)(g, x)
    }

    pub fn class_action(&self) -> ClassAction<'_> {
        let classes = self.parent.classes(&self.q);
        let mut class_of = HashMap::new();
        for (i, c) in classes.iter().enumerate() {
            for &x in &c.members {
                class_of.insert(x, i);
            }
        }
        ClassAction { local: self, classes, class_of }
    }

    pub fn irr_action(&self) -> Result<IrrAction<'_>> {
        let irr = irr_with_defects(&self.parent, &self.q, self.p)?;
        Ok(IrrAction { local: self, irr })
    }
}

/// Out_F(Q) acting on the conjugacy classes of Q.
pub struct ClassAction<'a> {
    local: &'a LocalData,
    pub classes: Vec<ConjClass>,
    class_of: HashMap<Idx, usize>,
}

impl Action for ClassAction<'_> {
    fn degree(&self) -> usize {
        self.classes.len()
    }

    fn act(&self, g: Idx, c: usize) -> usize {
        self.class_of[&self.local.apply(g, self.classes[c].rep)]
    }
}

/// Out_F(Q) acting on Irr(Q) by μ ↦ μ∘φ_g⁻¹.
pub struct IrrAction<'a> {
    local: &'a LocalData,
    pub irr: LabeledIrrSet,
}

impl Action for IrrAction<'_> {
    fn degree(&self) -> usize {
        self.irr.len()
    }

    fn act(&self, g: Idx, mu: usize) -> usize {
        let gi = self.local.out.inv(g);
        self.irr.act(|t| self.local.apply(gi, t), mu)
    }
}
