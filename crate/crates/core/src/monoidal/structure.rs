use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fincat::{full_subcategory, product_category, Budget, FinCategory, Functor, Mor, Obj, ProductCategory};
use crate::report::Report;

/// A monoidal structure on a finite category.
///
/// The tensor is stored as two dense tables: `x⊗y` at `x·n + y` and `f⊗g`
/// at `f·m + g`. The associator is indexed by `(x·n + y)·n + z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidalStructure {
    base: Arc<FinCategory>,
    tensor_obj: Vec<Obj>,
    tensor_mor: Vec<Mor>,
    unit: Obj,
    associator: Vec<Mor>,
    left_unitor: Vec<Mor>,
    right_unitor: Vec<Mor>,
}

impl MonoidalStructure {
    /// Validates table shapes only; the laws are checked by [`check_monoidal`].
    pub fn new(
        base: Arc<FinCategory>,
        tensor_obj: Vec<Obj>,
        tensor_mor: Vec<Mor>,
        unit: Obj,
        associator: Vec<Mor>,
        left_unitor: Vec<Mor>,
        right_unitor: Vec<Mor>,
    ) -> Result<Self> {
        let n = base.object_count();
        let m = base.morphism_count();
        let name = base.name().to_string();
        let shape = |what: &str, ok: bool| {
            if ok {
                Ok(())
            } else {
                Err(Error::structural(format!("monoidal structure on {name}: {what}")))
            }
        };
        shape("tensor object table size", tensor_obj.len() == n * n)?;
        shape("tensor morphism table size", tensor_mor.len() == m * m)?;
        shape("associator table size", associator.len() == n * n * n)?;
        shape("unitor table size", left_unitor.len() == n && right_unitor.len() == n)?;
        shape("unit out of range", unit.0 < n)?;
        shape("object id out of range", tensor_obj.iter().all(|x| x.0 < n))?;
        shape(
            "morphism id out of range",
            tensor_mor
                .iter()
                .chain(&associator)
                .chain(&left_unitor)
                .chain(&right_unitor)
                .all(|f| f.0 < m),
        )?;
        Ok(MonoidalStructure {
            base,
            tensor_obj,
            tensor_mor,
            unit,
            associator,
            left_unitor,
            right_unitor,
        })
    }

    /// A strict structure: associator and unitors are identities.
    pub fn strict(base: Arc<FinCategory>, tensor_obj: Vec<Obj>, tensor_mor: Vec<Mor>, unit: Obj) -> Result<Self> {
        let n = base.object_count();
        if tensor_obj.len() != n * n || tensor_obj.iter().any(|x| x.0 >= n) {
            return Err(Error::structural(format!(
                "strict structure on {}: tensor object table malformed",
                base.name()
            )));
        }
        let t = |x: usize, y: usize| tensor_obj[x * n + y];
        let mut associator = Vec::with_capacity(n * n * n);
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    associator.push(base.identity(t(t(x, y).0, z)));
                }
            }
        }
        let left_unitor = (0..n).map(|x| base.identity(t(unit.0, x))).collect();
        let right_unitor = (0..n).map(|x| base.identity(t(x, unit.0))).collect();
        Self::new(
            base,
            tensor_obj,
            tensor_mor,
            unit,
            associator,
            left_unitor,
            right_unitor,
        )
    }

    pub fn base(&self) -> &Arc<FinCategory> {
        &self.base
    }

    pub fn unit(&self) -> Obj {
        self.unit
    }

    pub fn tensor(&self, x: Obj, y: Obj) -> Obj {
        self.tensor_obj[x.0 * self.base.object_count() + y.0]
    }

    pub fn tensor_mor(&self, f: Mor, g: Mor) -> Mor {
        self.tensor_mor[f.0 * self.base.morphism_count() + g.0]
    }

    /// `α_{x,y,z}: (x⊗y)⊗z → x⊗(y⊗z)`.
    pub fn alpha(&self, x: Obj, y: Obj, z: Obj) -> Mor {
        let n = self.base.object_count();
        self.associator[(x.0 * n + y.0) * n + z.0]
    }

    /// `α^{-1}_{x,y,z}`, if the component is invertible.
    pub fn alpha_inv(&self, x: Obj, y: Obj, z: Obj) -> Option<Mor> {
        self.base.inverse(self.alpha(x, y, z))
    }

    /// `λ_x: I⊗x → x`.
    pub fn lambda(&self, x: Obj) -> Mor {
        self.left_unitor[x.0]
    }

    /// `ρ_x: x⊗I → x`.
    pub fn rho(&self, x: Obj) -> Mor {
        self.right_unitor[x.0]
    }

    pub fn tensor_obj_table(&self) -> &[Obj] {
        &self.tensor_obj
    }

    pub fn tensor_mor_table(&self) -> &[Mor] {
        &self.tensor_mor
    }

    pub fn associator_table(&self) -> &[Mor] {
        &self.associator
    }

    pub fn left_unitor_table(&self) -> &[Mor] {
        &self.left_unitor
    }

    pub fn right_unitor_table(&self) -> &[Mor] {
        &self.right_unitor
    }

    /// `f⊗id_y`.
    pub fn whisker_r(&self, f: Mor, y: Obj) -> Mor {
        self.tensor_mor(f, self.base.identity(y))
    }

    /// `id_x⊗g`.
    pub fn whisker_l(&self, x: Obj, g: Mor) -> Mor {
        self.tensor_mor(self.base.identity(x), g)
    }

    pub fn is_strict(&self) -> bool {
        let c = &self.base;
        self.associator
            .iter()
            .chain(&self.left_unitor)
            .chain(&self.right_unitor)
            .all(|&f| c.is_identity(f))
    }

    /// The tensor as a functor `base × base → base`.
    pub fn tensor_functor(&self, budget: &Budget) -> Result<(ProductCategory, Functor)> {
        let prod = product_category(&self.base, &self.base, budget)?;
        let c = prod.category();
        let obj = c
            .objects()
            .map(|x| {
                let (a, b) = prod.split(x);
                self.tensor(a, b)
            })
            .collect();
        let mor = c
            .morphisms()
            .map(|f| {
                let (g, h) = prod.split_mor(f);
                self.tensor_mor(g, h)
            })
            .collect();
        let f = Functor::new(c.clone(), self.base.clone(), obj, mor)?;
        Ok((prod, f))
    }

    /// Builds the structure from a tensor functor on `base × base`.
    pub fn from_tensor_functor(
        prod: &ProductCategory,
        tensor: &Functor,
        unit: Obj,
        associator: Vec<Mor>,
        left_unitor: Vec<Mor>,
        right_unitor: Vec<Mor>,
    ) -> Result<Self> {
        let base = prod.left().clone();
        let tensor_obj = tensor.obj_map().to_vec();
        let tensor_mor = tensor.mor_map().to_vec();
        Self::new(
            base,
            tensor_obj,
            tensor_mor,
            unit,
            associator,
            left_unitor,
            right_unitor,
        )
    }

    /// Restriction to a full subcategory closed under the tensor and
    /// containing the unit. Returns the structure and the inclusion.
    pub fn restrict(&self, objects: &[Obj], name: &str) -> Result<(MonoidalStructure, Functor)> {
        let (sub, inc) = full_subcategory(&self.base, objects, name)?;
        let mut local_obj = vec![None; self.base.object_count()];
        for (i, &x) in objects.iter().enumerate() {
            local_obj[x.0] = Some(Obj(i));
        }
        let mut local_mor = vec![None; self.base.morphism_count()];
        for f in sub.morphisms() {
            local_mor[inc.mor(f).0] = Some(f);
        }
        let closed = |x: Obj| {
            local_obj[x.0].ok_or_else(|| {
                Error::structural(format!(
                    "{name}: object {} of {} is not closed under the tensor",
                    self.base.obj_label(x),
                    self.base.name()
                ))
            })
        };
        let lm = |f: Mor| local_mor[f.0].expect("full subcategory contains the morphism");
        let unit = closed(self.unit)?;
        let mut tensor_obj = Vec::new();
        for &x in objects {
            for &y in objects {
                tensor_obj.push(closed(self.tensor(x, y))?);
            }
        }
        let mut tensor_mor = Vec::new();
        for f in sub.morphisms() {
            for g in sub.morphisms() {
                tensor_mor.push(lm(self.tensor_mor(inc.mor(f), inc.mor(g))));
            }
        }
        let mut associator = Vec::new();
        for &x in objects {
            for &y in objects {
                for &z in objects {
                    associator.push(lm(self.alpha(x, y, z)));
                }
            }
        }
        let left_unitor = objects.iter().map(|&x| lm(self.lambda(x))).collect();
        let right_unitor = objects.iter().map(|&x| lm(self.rho(x))).collect();
        let s = MonoidalStructure::new(sub, tensor_obj, tensor_mor, unit, associator, left_unitor, right_unitor)?;
        Ok((s, inc))
    }
}

/// `true` when both diagrammatic paths compose and agree.
pub(crate) fn paths_agree(c: &FinCategory, lhs: &[Mor], rhs: &[Mor]) -> bool {
    match (c.compose_path(lhs), c.compose_path(rhs)) {
        (Some(a), Some(b)) => a == b,
        _ => false,
    }
}

pub(crate) fn path_detail(c: &FinCategory, lhs: &[Mor], rhs: &[Mor]) -> String {
    format!("{} != {}", c.describe_path(lhs), c.describe_path(rhs))
}

/// Exhaustive coherence scan: tensor bifunctoriality, typing, invertibility
/// and naturality of the associator and unitors, pentagon and triangle.
pub fn check_monoidal(s: &MonoidalStructure) -> Report {
    let c = s.base();
    let mut report = Report::new();
    check_tensor(s, &mut report);
    if !report.is_ok() {
        return report;
    }
    let objs: Vec<Obj> = c.objects().collect();
    let t = |x: Obj, y: Obj| s.tensor(x, y);

    // typing and invertibility
    for &x in &objs {
        for &y in &objs {
            for &z in &objs {
                let a = s.alpha(x, y, z);
                report.require(
                    c.source(a) == t(t(x, y), z) && c.target(a) == t(x, t(y, z)),
                    "associator-typing",
                    || vec![x.0, y.0, z.0],
                    || format!("α at {} has the wrong endpoints", c.mor_label(a)),
                );
                report.require(
                    c.is_iso(a),
                    "associator-iso",
                    || vec![x.0, y.0, z.0],
                    || format!("α component {} is not invertible", c.mor_label(a)),
                );
            }
        }
        let l = s.lambda(x);
        report.require(
            c.source(l) == t(s.unit(), x) && c.target(l) == x,
            "left-unitor-typing",
            || vec![x.0],
            || format!("λ_{} has the wrong endpoints", c.obj_label(x)),
        );
        report.require(
            c.is_iso(l),
            "left-unitor-iso",
            || vec![x.0],
            || format!("λ_{} is not invertible", c.obj_label(x)),
        );
        let r = s.rho(x);
        report.require(
            c.source(r) == t(x, s.unit()) && c.target(r) == x,
            "right-unitor-typing",
            || vec![x.0],
            || format!("ρ_{} has the wrong endpoints", c.obj_label(x)),
        );
        report.require(
            c.is_iso(r),
            "right-unitor-iso",
            || vec![x.0],
            || format!("ρ_{} is not invertible", c.obj_label(x)),
        );
    }
    if report.has_law("associator-typing")
        || report.has_law("left-unitor-typing")
        || report.has_law("right-unitor-typing")
    {
        return report;
    }

    // naturality, one argument at a time
    for f in c.morphisms() {
        let (a, b) = (c.source(f), c.target(f));
        let idm = |x: Obj| c.identity(x);
        for &y in &objs {
            for &z in &objs {
                let lhs = [s.alpha(a, y, z), s.tensor_mor(f, s.tensor_mor(idm(y), idm(z)))];
                let rhs = [s.tensor_mor(s.tensor_mor(f, idm(y)), idm(z)), s.alpha(b, y, z)];
                report.require(
                    paths_agree(c, &lhs, &rhs),
                    "associator-naturality",
                    || vec![f.0, y.0, z.0],
                    || path_detail(c, &lhs, &rhs),
                );
                let lhs = [s.alpha(y, a, z), s.tensor_mor(idm(y), s.tensor_mor(f, idm(z)))];
                let rhs = [s.tensor_mor(s.tensor_mor(idm(y), f), idm(z)), s.alpha(y, b, z)];
                report.require(
                    paths_agree(c, &lhs, &rhs),
                    "associator-naturality",
                    || vec![y.0, f.0, z.0],
                    || path_detail(c, &lhs, &rhs),
                );
                let lhs = [s.alpha(y, z, a), s.tensor_mor(idm(y), s.tensor_mor(idm(z), f))];
                let rhs = [s.tensor_mor(s.tensor_mor(idm(y), idm(z)), f), s.alpha(y, z, b)];
                report.require(
                    paths_agree(c, &lhs, &rhs),
                    "associator-naturality",
                    || vec![y.0, z.0, f.0],
                    || path_detail(c, &lhs, &rhs),
                );
            }
        }
        let lhs = [s.lambda(a), f];
        let rhs = [s.whisker_l(s.unit(), f), s.lambda(b)];
        report.require(
            paths_agree(c, &lhs, &rhs),
            "left-unitor-naturality",
            || vec![f.0],
            || path_detail(c, &lhs, &rhs),
        );
        let lhs = [s.rho(a), f];
        let rhs = [s.whisker_r(f, s.unit()), s.rho(b)];
        report.require(
            paths_agree(c, &lhs, &rhs),
            "right-unitor-naturality",
            || vec![f.0],
            || path_detail(c, &lhs, &rhs),
        );
    }

    for &x in &objs {
        for &y in &objs {
            for &z in &objs {
                for &w in &objs {
                    let lhs = [s.alpha(t(x, y), z, w), s.alpha(x, y, t(z, w))];
                    let rhs = [
                        s.whisker_r(s.alpha(x, y, z), w),
                        s.alpha(x, t(y, z), w),
                        s.whisker_l(x, s.alpha(y, z, w)),
                    ];
                    report.require(
                        paths_agree(c, &lhs, &rhs),
                        "pentagon",
                        || vec![x.0, y.0, z.0, w.0],
                        || path_detail(c, &lhs, &rhs),
                    );
                }
            }
        }
    }
    for &x in &objs {
        for &y in &objs {
            let lhs = [s.alpha(x, s.unit(), y), s.whisker_l(x, s.lambda(y))];
            let rhs = [s.whisker_r(s.rho(x), y)];
            report.require(
                paths_agree(c, &lhs, &rhs),
                "triangle",
                || vec![x.0, y.0],
                || path_detail(c, &lhs, &rhs),
            );
        }
    }
    report
}

fn check_tensor(s: &MonoidalStructure, report: &mut Report) {
    let c = s.base();
    for f in c.morphisms() {
        for g in c.morphisms() {
            let h = s.tensor_mor(f, g);
            report.require(
                c.source(h) == s.tensor(c.source(f), c.source(g)) && c.target(h) == s.tensor(c.target(f), c.target(g)),
                "tensor-typing",
                || vec![f.0, g.0],
                || format!("{} ⊗ {} has the wrong endpoints", c.mor_label(f), c.mor_label(g)),
            );
        }
    }
    for x in c.objects() {
        for y in c.objects() {
            report.require(
                s.tensor_mor(c.identity(x), c.identity(y)) == c.identity(s.tensor(x, y)),
                "tensor-identity",
                || vec![x.0, y.0],
                || format!("id_{} ⊗ id_{} is not an identity", c.obj_label(x), c.obj_label(y)),
            );
        }
    }
    if report.has_law("tensor-typing") {
        return;
    }
    // bifunctoriality reduces to functoriality in each argument plus interchange
    for f in c.morphisms() {
        for g in c.morphisms() {
            let h = s.tensor_mor(f, g);
            let via_left = c.try_compose(s.whisker_r(f, c.target(g)), s.whisker_l(c.source(f), g));
            let via_right = c.try_compose(s.whisker_l(c.target(f), g), s.whisker_r(f, c.source(g)));
            report.require(
                via_left == Some(h) && via_right == Some(h),
                "tensor-interchange",
                || vec![f.0, g.0],
                || {
                    format!(
                        "{} ⊗ {} differs from a whiskered composite",
                        c.mor_label(f),
                        c.mor_label(g)
                    )
                },
            );
        }
    }
    for (g, f, gf) in c.composition_triples() {
        for y in c.objects() {
            report.require(
                c.try_compose(s.whisker_r(g, y), s.whisker_r(f, y)) == Some(s.whisker_r(gf, y)),
                "tensor-composition",
                || vec![g.0, f.0, y.0],
                || format!("(- ⊗ {}) does not preserve a composite", c.obj_label(y)),
            );
            report.require(
                c.try_compose(s.whisker_l(y, g), s.whisker_l(y, f)) == Some(s.whisker_l(y, gf)),
                "tensor-composition",
                || vec![y.0, g.0, f.0],
                || format!("({} ⊗ -) does not preserve a composite", c.obj_label(y)),
            );
        }
    }
}
