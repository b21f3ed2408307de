//! Ray shooting among segment obstacles, with shot rays kept as obstacles.

use crate::geom::predicates::{cross_vec, dot_vec};
use crate::geom::{Aabb, DynamicBvh, Point, Rational, RationalPoint, Visitor};

pub type ObstacleId = usize;

/// A closed segment `base + s·dir`, `s ∈ [0, extent]`. Tree edges have
/// extent 1, bare vertices a zero direction, inserted rays the parameter at
/// which they stopped.
#[derive(Clone, Debug, PartialEq)]
pub struct Obstacle {
    pub base: Point,
    pub dir: (i128, i128),
    pub extent: Rational,
    pub end: RationalPoint,
    /// Component handle at insertion time; map through union-find.
    pub owner: usize,
    bbox: Aabb,
}

impl Obstacle {
    pub fn segment(a: Point, b: Point, owner: usize) -> Self {
        Obstacle {
            base: a,
            dir: b.sub(a),
            extent: Rational::ONE,
            end: b.to_rational(),
            owner,
            bbox: Aabb::of_points(&[a, b]),
        }
    }

    /// A segment, or a point obstacle when `a == b`.
    pub fn between(a: Point, b: Point, owner: usize) -> Self {
        if a == b {
            Obstacle::point(a, owner)
        } else {
            Obstacle::segment(a, b, owner)
        }
    }

    pub fn point(p: Point, owner: usize) -> Self {
        Obstacle { base: p, dir: (0, 0), extent: Rational::ZERO, end: p.to_rational(), owner, bbox: Aabb::of_point(p) }
    }

    /// The piece of the ray from `origin` through `through` up to parameter
    /// `extent`.
    pub fn ray(origin: Point, through: Point, extent: Rational, owner: usize) -> Self {
        let dir = through.sub(origin);
        let end = RationalPoint::along(origin, dir, extent.num(), extent.den());
        Obstacle { base: origin, dir, extent, bbox: rational_bbox(origin, &end), end, owner }
    }

    /// Integer box containing the obstacle.
    pub fn bbox(&self) -> Aabb {
        self.bbox
    }
}

fn floor(r: &Rational) -> i64 {
    r.num().div_euclid(r.den()) as i64
}

fn ceil(r: &Rational) -> i64 {
    -((-r.num()).div_euclid(r.den())) as i64
}

fn rational_bbox(a: Point, b: &RationalPoint) -> Aabb {
    Aabb::new(a.x.min(floor(&b.x)), a.y.min(floor(&b.y)), a.x.max(ceil(&b.x)), a.y.max(ceil(&b.y)))
}

/// First contact of a ray with an obstacle.
#[derive(Clone, Debug, PartialEq)]
pub struct Hit {
    /// Ray parameter with `through` at 1.
    pub t: Rational,
    pub point: RationalPoint,
    pub obstacle: ObstacleId,
    /// Owner of the obstacle hit.
    pub component: usize,
}

/// Smallest `t > 0` with `origin + t·d` on the obstacle. Obstacles through
/// the origin that continue along the ray have no smallest such `t` and are
/// ignored.
pub fn ray_hit(origin: Point, d: (i128, i128), ob: &Obstacle) -> Option<Rational> {
    let w = ob.base.sub(origin);
    let den = cross_vec(d, ob.dir);
    if den != 0 {
        let s = Rational::new(cross_vec(w, d), den);
        if s < Rational::ZERO || s > ob.extent {
            return None;
        }
        let t = Rational::new(cross_vec(w, ob.dir), den);
        return (t > Rational::ZERO).then_some(t);
    }
    if cross_vec(w, d) != 0 {
        return None;
    }
    // collinear: the obstacle covers the interval between its endpoints'
    // parameters, and the nearer endpoint is the first contact
    let t0 = Rational::new(dot_vec(w, d), dot_vec(d, d));
    let t1 = param_on_line(origin, d, &ob.end);
    let lo = t0.min(t1);
    (lo > Rational::ZERO).then_some(lo)
}

/// Parameter of `p` on the line `o + t·d`; `p` must lie on that line.
fn param_on_line(o: Point, d: (i128, i128), p: &RationalPoint) -> Rational {
    let (c, oc, dc) = if d.0.abs() >= d.1.abs() { (&p.x, o.x, d.0) } else { (&p.y, o.y, d.1) };
    let exact = (oc as i128).checked_mul(c.den()).and_then(|v| c.num().checked_sub(v)).zip(c.den().checked_mul(dc));
    match exact {
        Some((num, den)) => Rational::new(num, den),
        None => {
            use num_bigint::BigInt;
            let num = BigInt::from(c.num()) - BigInt::from(oc) * BigInt::from(c.den());
            Rational::from_big(num, BigInt::from(c.den()) * BigInt::from(dc))
        }
    }
}

/// A stored segment intersects the closed piece of ray `[origin, origin + limit·d]`
/// only if their boxes meet.
pub(crate) fn shot_bbox(origin: Point, d: (i128, i128), limit: &Rational) -> Aabb {
    rational_bbox(origin, &RationalPoint::along(origin, d, limit.num(), limit.den()))
}

/// Result of a shot that was also inserted as an obstacle.
#[derive(Clone, Debug, PartialEq)]
pub struct Shot {
    pub hit: Option<Hit>,
    pub inserted: ObstacleId,
}

/// Ray shooting with permanent insertion of the shot rays.
pub trait RayShooter {
    fn insert(&mut self, obstacle: Obstacle) -> ObstacleId;

    fn obstacle(&self, id: ObstacleId) -> &Obstacle;

    fn len(&self) -> usize;

    fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// First obstacle whose owner is not skipped, hit at `0 < t ≤ limit`
    /// (unbounded when `limit` is `None`). Equal `t` goes to the lower id.
    fn first_hit(
        &self,
        origin: Point,
        through: Point,
        limit: Option<&Rational>,
        skip: &dyn Fn(usize) -> bool,
    ) -> Option<Hit>;

    /// Stores many obstacles; they get consecutive ids in order.
    fn insert_all(&mut self, obstacles: Vec<Obstacle>) {
        for ob in obstacles {
            self.insert(ob);
        }
    }

    fn insert_segment(&mut self, a: Point, b: Point, owner: usize) -> ObstacleId {
        self.insert(Obstacle::between(a, b, owner))
    }

    fn shoot(&self, origin: Point, through: Point) -> Option<Hit> {
        self.first_hit(origin, through, None, &|_| false)
    }

    /// Shoots up to `limit`, then stores the travelled piece of the ray as an
    /// obstacle owned by `owner`.
    fn permashoot(
        &mut self,
        origin: Point,
        through: Point,
        limit: Rational,
        owner: usize,
        skip: &dyn Fn(usize) -> bool,
    ) -> Shot {
        let hit = self.first_hit(origin, through, Some(&limit), skip);
        let extent = hit.as_ref().map_or(limit, |h| h.t);
        let inserted = self.insert(Obstacle::ray(origin, through, extent, owner));
        Shot { hit, inserted }
    }
}

pub(crate) fn make_hit(origin: Point, d: (i128, i128), t: Rational, id: ObstacleId, owner: usize) -> Hit {
    Hit { point: RationalPoint::along(origin, d, t.num(), t.den()), t, obstacle: id, component: owner }
}

/// Checks every stored obstacle on each shot.
#[derive(Clone, Debug, Default)]
pub struct LinearShooter {
    obstacles: Vec<Obstacle>,
}

impl LinearShooter {
    pub fn new() -> Self {
        Self::default()
    }
}

impl RayShooter for LinearShooter {
    fn insert(&mut self, obstacle: Obstacle) -> ObstacleId {
        self.obstacles.push(obstacle);
        self.obstacles.len() - 1
    }

    fn obstacle(&self, id: ObstacleId) -> &Obstacle {
        &self.obstacles[id]
    }

    fn len(&self) -> usize {
        self.obstacles.len()
    }

    fn first_hit(
        &self,
        origin: Point,
        through: Point,
        limit: Option<&Rational>,
        skip: &dyn Fn(usize) -> bool,
    ) -> Option<Hit> {
        let d = through.sub(origin);
        let window = limit.map(|l| shot_bbox(origin, d, l));
        let mut best: Option<(Rational, ObstacleId)> = None;
        for (id, ob) in self.obstacles.iter().enumerate() {
            if window.is_some_and(|w| !w.intersects(&ob.bbox)) || skip(ob.owner) {
                continue;
            }
            let Some(t) = ray_hit(origin, d, ob) else { continue };
            if limit.is_some_and(|l| t > *l) {
                continue;
            }
            if best.as_ref().is_none_or(|(bt, _)| t < *bt) {
                best = Some((t, id));
            }
        }
        best.map(|(t, id)| make_hit(origin, d, t, id, self.obstacles[id].owner))
    }
}

/// Keeps obstacles in a bounding-volume hierarchy and visits boxes in order
/// of where the ray enters them, stopping once no box can beat the best hit.
#[derive(Clone, Debug, Default)]
pub struct BvhShooter {
    obstacles: Vec<Obstacle>,
    index: DynamicBvh,
}

impl BvhShooter {
    pub fn new() -> Self {
        Self::default()
    }
}

/// Nearest-hit search along `origin + t·d`. Boxes are widened by one unit
/// and the bound relaxed slightly so float rounding never prunes a box
/// holding an exact hit.
struct RaySearch<'a> {
    obstacles: &'a [Obstacle],
    origin: Point,
    d: (i128, i128),
    of: (f64, f64),
    df: (f64, f64),
    limit: Option<&'a Rational>,
    limit_f: f64,
    skip: &'a dyn Fn(usize) -> bool,
    best: Option<(Rational, ObstacleId)>,
    best_f: f64,
}

const PRUNE_SLACK: f64 = 1e-12;

impl RaySearch<'_> {
    fn bound(&self) -> f64 {
        self.best_f.min(self.limit_f) * (1.0 + PRUNE_SLACK)
    }
}

fn slab(o: f64, d: f64, lo: f64, hi: f64, t0: &mut f64, t1: &mut f64) -> bool {
    if d == 0.0 {
        return lo <= o && o <= hi;
    }
    let (a, b) = ((lo - o) / d, (hi - o) / d);
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    *t0 = t0.max(a);
    *t1 = t1.min(b);
    t0 <= t1
}

impl Visitor for RaySearch<'_> {
    fn priority(&mut self, b: &Aabb) -> Option<f64> {
        let (mut t0, mut t1) = (0.0f64, self.bound());
        let hit = slab(self.of.0, self.df.0, b.xmin as f64 - 1.0, b.xmax as f64 + 1.0, &mut t0, &mut t1)
            && slab(self.of.1, self.df.1, b.ymin as f64 - 1.0, b.ymax as f64 + 1.0, &mut t0, &mut t1);
        hit.then_some(t0)
    }

    fn item(&mut self, id: usize, _bbox: &Aabb) {
        let ob = &self.obstacles[id];
        if (self.skip)(ob.owner) {
            return;
        }
        let Some(t) = ray_hit(self.origin, self.d, ob) else { return };
        if self.limit.is_some_and(|l| t > *l) {
            return;
        }
        let better = match &self.best {
            None => true,
            Some((bt, bid)) => t < *bt || (t == *bt && id < *bid),
        };
        if better {
            self.best_f = t.to_f64();
            self.best = Some((t, id));
        }
    }
}

impl RayShooter for BvhShooter {
    fn insert(&mut self, obstacle: Obstacle) -> ObstacleId {
        let id = self.obstacles.len();
        self.index.insert(obstacle.bbox, id);
        self.obstacles.push(obstacle);
        id
    }

    fn insert_all(&mut self, obstacles: Vec<Obstacle>) {
        if !self.obstacles.is_empty() {
            obstacles.into_iter().for_each(|ob| {
                self.insert(ob);
            });
            return;
        }
        self.index = DynamicBvh::bulk(obstacles.iter().enumerate().map(|(i, ob)| (ob.bbox, i)).collect());
        self.obstacles = obstacles;
    }

    fn obstacle(&self, id: ObstacleId) -> &Obstacle {
        &self.obstacles[id]
    }

    fn len(&self) -> usize {
        self.obstacles.len()
    }

    fn first_hit(
        &self,
        origin: Point,
        through: Point,
        limit: Option<&Rational>,
        skip: &dyn Fn(usize) -> bool,
    ) -> Option<Hit> {
        let d = through.sub(origin);
        let mut search = RaySearch {
            obstacles: &self.obstacles,
            origin,
            d,
            of: (origin.x as f64, origin.y as f64),
            df: (d.0 as f64, d.1 as f64),
            limit,
            limit_f: limit.map_or(f64::INFINITY, Rational::to_f64),
            skip,
            best: None,
            best_f: f64::INFINITY,
        };
        self.index.traverse(&mut search);
        search.best.map(|(t, id)| make_hit(origin, d, t, id, self.obstacles[id].owner))
    }
}
