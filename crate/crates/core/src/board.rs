//! Nice boards and the frame bijection between `Av(1234)` and `Av(1324, 3416725)`.
//!
//! A permutation splits into its *frame* (left-to-right minima and
//! right-to-left maxima) and the remaining entries. The remaining entries live
//! on a nice board: a skew-Ferrers board with as many rows as columns that
//! contains the antidiagonal. Every nice board has exactly one rook filling
//! avoiding `B_1234` (the antidiagonal) and exactly one avoiding both
//! `B_1324` and `B_3416725` (the greedy filling), so swapping one filling for
//! the other while keeping the frame is a bijection between the two classes.
//!
//! Coordinates: columns are numbered left to right and rows bottom to top,
//! both from 1. Column `i` of a board occupies rows `bottom[i]..=top[i]`.

use std::fmt;
use std::sync::LazyLock;

use serde::Serialize;
use thiserror::Error;

use crate::perm::{avoids_all, frame_points, PatternSet, Permutation};

/// Largest size [`enumerate_nice_boards`] accepts unless given another cap.
pub const DEFAULT_BOARD_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoardError {
    #[error("board bounds have lengths {bottom} and {top}")]
    LengthMismatch { bottom: usize, top: usize },
    #[error("column {column}: {reason}")]
    NotNice { column: usize, reason: &'static str },
    #[error("filling has {got} columns, board has {expected}")]
    FillingSize { got: usize, expected: usize },
    #[error("filling is not a rook placement")]
    NotRook,
    #[error("filling puts column {column} in row {row}, outside the board")]
    OutsideBoard { column: usize, row: usize },
    #[error("invalid frame: {0}")]
    InvalidFrame(&'static str),
    #[error("board size {size} exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("the empty permutation has no frame")]
    EmptyPermutation,
    #[error("{perm} is not in the source class {class}")]
    NotInSourceClass {
        perm: Permutation,
        class: PatternSet,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NiceBoard {
    bottom: Vec<usize>,
    top: Vec<usize>,
}

impl NiceBoard {
    /// Validates nonincreasing bounds and antidiagonal containment.
    pub fn new(bottom: Vec<usize>, top: Vec<usize>) -> Result<Self, BoardError> {
        if bottom.len() != top.len() {
            return Err(BoardError::LengthMismatch {
                bottom: bottom.len(),
                top: top.len(),
            });
        }
        let r = bottom.len();
        for i in 0..r {
            let column = i + 1;
            let anti = r - i;
            if bottom[i] < 1 || top[i] > r {
                return Err(BoardError::NotNice {
                    column,
                    reason: "rows out of range",
                });
            }
            if bottom[i] > anti || top[i] < anti {
                return Err(BoardError::NotNice {
                    column,
                    reason: "misses the antidiagonal",
                });
            }
            if i > 0 && (bottom[i] > bottom[i - 1] || top[i] > top[i - 1]) {
                return Err(BoardError::NotNice {
                    column,
                    reason: "bounds increase",
                });
            }
        }
        Ok(Self { bottom, top })
    }

    pub fn empty() -> Self {
        Self {
            bottom: Vec::new(),
            top: Vec::new(),
        }
    }

    /// The full `r x r` square.
    pub fn square(r: usize) -> Self {
        Self {
            bottom: vec![1; r],
            top: vec![r; r],
        }
    }

    pub fn size(&self) -> usize {
        self.bottom.len()
    }

    pub fn bottom(&self) -> &[usize] {
        &self.bottom
    }

    pub fn top(&self) -> &[usize] {
        &self.top
    }

    pub fn has_cell(&self, column: usize, row: usize) -> bool {
        (1..=self.size()).contains(&column)
            && self.bottom[column - 1] <= row
            && row <= self.top[column - 1]
    }

    pub fn cell_count(&self) -> usize {
        self.bottom
            .iter()
            .zip(&self.top)
            .map(|(b, t)| t - b + 1)
            .sum()
    }

    /// Mirror image across the antidiagonal: cell `(c, ρ)` goes to `(r+1-ρ, r+1-c)`.
    pub fn reflect(&self) -> NiceBoard {
        let r = self.size();
        let mut bottom = Vec::with_capacity(r);
        let mut top = Vec::with_capacity(r);
        for column in 1..=r {
            let row = r + 1 - column;
            let cols: Vec<usize> = (1..=r).filter(|&c| self.has_cell(c, row)).collect();
            let (first, last) = (cols[0], cols[cols.len() - 1]);
            bottom.push(r + 1 - last);
            top.push(r + 1 - first);
        }
        NiceBoard { bottom, top }
    }

    pub fn is_antidiagonally_symmetric(&self) -> bool {
        self.reflect() == *self
    }
}

/// A rook placement: `row_of[i]` is the row of the 1 in column `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    row_of: Vec<usize>,
}

impl Filling {
    /// Checks only that `row_of` is a bijection onto `1..=r`.
    pub fn new(row_of: Vec<usize>) -> Result<Self, BoardError> {
        let r = row_of.len();
        let mut seen = vec![false; r + 1];
        for &row in &row_of {
            if row == 0 || row > r || std::mem::replace(&mut seen[row], true) {
                return Err(BoardError::NotRook);
            }
        }
        Ok(Self { row_of })
    }

    pub fn row_of(&self) -> &[usize] {
        &self.row_of
    }

    /// Row of the 1 in 1-indexed `column`.
    pub fn row(&self, column: usize) -> usize {
        self.row_of[column - 1]
    }

    pub fn size(&self) -> usize {
        self.row_of.len()
    }

    /// The filling read as a permutation (column order, row values).
    pub fn as_permutation(&self) -> Permutation {
        Permutation::new(self.row_of.iter().copied()).expect("rook filling is a bijection")
    }

    pub fn fits(&self, board: &NiceBoard) -> Result<(), BoardError> {
        if self.size() != board.size() {
            return Err(BoardError::FillingSize {
                got: self.size(),
                expected: board.size(),
            });
        }
        for (i, &row) in self.row_of.iter().enumerate() {
            if !board.has_cell(i + 1, row) {
                return Err(BoardError::OutsideBoard { column: i + 1, row });
            }
        }
        Ok(())
    }
}

/// A nice board with a rook filling inside it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FilledBoard {
    board: NiceBoard,
    filling: Filling,
}

impl FilledBoard {
    pub fn new(board: NiceBoard, filling: Filling) -> Result<Self, BoardError> {
        filling.fits(&board)?;
        Ok(Self { board, filling })
    }

    pub fn board(&self) -> &NiceBoard {
        &self.board
    }

    pub fn filling(&self) -> &Filling {
        &self.filling
    }

    /// ASCII picture, top row first: `*` for a 1, `.` for an empty cell, space outside the board.
    pub fn render_ascii(&self) -> String {
        let r = self.board.size();
        let mut out = String::new();
        for row in (1..=r).rev() {
            for column in 1..=r {
                out.push(if !self.board.has_cell(column, row) {
                    ' '
                } else if self.filling.row(column) == row {
                    '*'
                } else {
                    '.'
                });
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for FilledBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

impl Serialize for FilledBoard {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            r: usize,
            bottom: &'a [usize],
            top: &'a [usize],
            row_of: &'a [usize],
        }
        Wire {
            r: self.board.size(),
            bottom: &self.board.bottom,
            top: &self.board.top,
            row_of: &self.filling.row_of,
        }
        .serialize(serializer)
    }
}

/// The left-to-right minima and right-to-left maxima of a permutation, as
/// 1-indexed `(position, value)` pairs sorted by position.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Frame {
    n: usize,
    lr_mins: Vec<(usize, usize)>,
    rl_maxs: Vec<(usize, usize)>,
}

impl Frame {
    pub fn new(
        n: usize,
        lr_mins: Vec<(usize, usize)>,
        rl_maxs: Vec<(usize, usize)>,
    ) -> Result<Self, BoardError> {
        let bad = |msg| Err(BoardError::InvalidFrame(msg));
        if n == 0 {
            return bad("length must be positive");
        }
        if lr_mins.first().map(|e| e.0) != Some(1) {
            return bad("position 1 must be a left-to-right minimum");
        }
        if rl_maxs.last().map(|e| e.0) != Some(n) {
            return bad("position n must be a right-to-left maximum");
        }
        for seq in [&lr_mins, &rl_maxs] {
            if seq.windows(2).any(|w| w[0].0 >= w[1].0 || w[0].1 <= w[1].1) {
                return bad("positions must increase while values decrease");
            }
            if seq.iter().any(|&(p, v)| p == 0 || p > n || v == 0 || v > n) {
                return bad("entry out of range");
            }
        }
        let frame = Self {
            n,
            lr_mins,
            rl_maxs,
        };
        let entries = frame.entries();
        let mut values: Vec<usize> = entries.iter().map(|e| e.1).collect();
        values.sort_unstable();
        if entries.windows(2).any(|w| w[0].0 == w[1].0) || values.windows(2).any(|w| w[0] == w[1]) {
            return bad("shared positions or values must belong to the same entry");
        }
        Ok(frame)
    }

    pub fn of(perm: &Permutation) -> Result<Self, BoardError> {
        let (lr, rl) = frame_points(perm).map_err(|_| BoardError::EmptyPermutation)?;
        Ok(Self {
            n: perm.len(),
            lr_mins: lr.into_iter().map(|p| (p, perm.at(p))).collect(),
            rl_maxs: rl.into_iter().map(|p| (p, perm.at(p))).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn lr_mins(&self) -> &[(usize, usize)] {
        &self.lr_mins
    }

    pub fn rl_maxs(&self) -> &[(usize, usize)] {
        &self.rl_maxs
    }

    /// All frame entries, each once, sorted by position.
    pub fn entries(&self) -> Vec<(usize, usize)> {
        let mut all: Vec<(usize, usize)> =
            self.lr_mins.iter().chain(&self.rl_maxs).copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// Positions and values not used by the frame, both ascending.
    fn free_positions_and_values(&self) -> (Vec<usize>, Vec<usize>) {
        let entries = self.entries();
        let mut used_pos = vec![false; self.n + 1];
        let mut used_val = vec![false; self.n + 1];
        for &(p, v) in &entries {
            used_pos[p] = true;
            used_val[v] = true;
        }
        let free_pos = (1..=self.n).filter(|&p| !used_pos[p]).collect();
        let free_val = (1..=self.n).filter(|&v| !used_val[v]).collect();
        (free_pos, free_val)
    }

    /// The board of cells strictly above-right of some left-to-right minimum
    /// and strictly below-left of some right-to-left maximum, with frame rows
    /// and columns deleted.
    pub fn board(&self) -> Result<NiceBoard, BoardError> {
        let (free_pos, free_val) = self.free_positions_and_values();
        if free_pos.len() != free_val.len() {
            return Err(BoardError::InvalidFrame(
                "frame rows and columns differ in number",
            ));
        }
        let mut bottom = Vec::with_capacity(free_pos.len());
        let mut top = Vec::with_capacity(free_pos.len());
        for &p in &free_pos {
            // lowest minimum to the left is the last one; highest maximum to the right is the first
            let lo = self
                .lr_mins
                .iter()
                .rev()
                .find(|e| e.0 < p)
                .map(|e| e.1)
                .ok_or(BoardError::InvalidFrame(
                    "column without a minimum to its left",
                ))?;
            let hi = self.rl_maxs.iter().find(|e| e.0 > p).map(|e| e.1).ok_or(
                BoardError::InvalidFrame("column without a maximum to its right"),
            )?;
            bottom.push(free_val.partition_point(|&v| v < lo) + 1);
            top.push(free_val.partition_point(|&v| v < hi));
        }
        NiceBoard::new(bottom, top)
    }
}

/// A permutation's frame, board and filling.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrameAndBoard {
    pub frame: Frame,
    #[serde(flatten)]
    pub filled: FilledBoard,
}

impl FrameAndBoard {
    pub fn board(&self) -> &NiceBoard {
        self.filled.board()
    }

    pub fn filling(&self) -> &Filling {
        self.filled.filling()
    }
}

/// Splits `perm` into frame, nice board and the filling left by its non-frame entries.
pub fn board_of(perm: &Permutation) -> Result<FrameAndBoard, BoardError> {
    let frame = Frame::of(perm)?;
    let board = frame.board()?;
    let (free_pos, free_val) = frame.free_positions_and_values();
    let row_of = free_pos
        .iter()
        .map(|&p| free_val.binary_search(&perm.at(p)).expect("free value") + 1)
        .collect();
    let filled = FilledBoard::new(board, Filling::new(row_of)?)?;
    Ok(FrameAndBoard { frame, filled })
}

/// Writes the frame back verbatim and places the filling's 1s on the free positions and values.
pub fn reconstruct(frame: &Frame, filling: &Filling) -> Result<Permutation, BoardError> {
    let board = frame.board()?;
    filling.fits(&board)?;
    let (free_pos, free_val) = frame.free_positions_and_values();
    let mut values = vec![0usize; frame.n];
    for (p, v) in frame.entries() {
        values[p - 1] = v;
    }
    for (i, &p) in free_pos.iter().enumerate() {
        values[p - 1] = free_val[filling.row(i + 1) - 1];
    }
    let perm = Permutation::new(values).map_err(|_| BoardError::InvalidFrame("values collide"))?;
    debug_assert_eq!(Frame::of(&perm).as_ref(), Ok(frame));
    Ok(perm)
}

/// Every nice board of size `r`, ordered lexicographically by `(bottom, top)`.
pub fn enumerate_nice_boards(r: usize) -> Result<Vec<NiceBoard>, BoardError> {
    enumerate_nice_boards_capped(r, DEFAULT_BOARD_CAP)
}

pub fn enumerate_nice_boards_capped(r: usize, cap: usize) -> Result<Vec<NiceBoard>, BoardError> {
    if r > cap {
        return Err(BoardError::CapExceeded { size: r, cap });
    }
    fn bounds(
        r: usize,
        i: usize,
        upper: bool,
        prev: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == r {
            out.push(cur.clone());
            return;
        }
        let anti = r - i;
        let range = if upper {
            anti..=prev.min(r)
        } else {
            1..=prev.min(anti)
        };
        for value in range {
            cur.push(value);
            bounds(r, i + 1, upper, value, cur, out);
            cur.pop();
        }
    }
    let mut bottoms = Vec::new();
    bounds(r, 0, false, r, &mut Vec::new(), &mut bottoms);
    let mut tops = Vec::new();
    bounds(r, 0, true, r, &mut Vec::new(), &mut tops);
    let mut out = Vec::with_capacity(bottoms.len() * tops.len());
    for bottom in &bottoms {
        for top in &tops {
            out.push(NiceBoard::new(bottom.clone(), top.clone())?);
        }
    }
    Ok(out)
}

/// All rook fillings that fit inside `board`, in lexicographic order.
pub fn rook_fillings(board: &NiceBoard) -> Vec<Filling> {
    fn place(
        board: &NiceBoard,
        used: &mut Vec<bool>,
        rows: &mut Vec<usize>,
        out: &mut Vec<Filling>,
    ) {
        let column = rows.len() + 1;
        if column > board.size() {
            out.push(Filling {
                row_of: rows.clone(),
            });
            return;
        }
        for row in board.bottom[column - 1]..=board.top[column - 1] {
            if !used[row] {
                used[row] = true;
                rows.push(row);
                place(board, used, rows, out);
                rows.pop();
                used[row] = false;
            }
        }
    }
    let mut out = Vec::new();
    place(
        board,
        &mut vec![false; board.size() + 1],
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Whether `pattern` occurs in `host`: some equinumerous order-preserving
/// choice of host rows and columns sends every cell of the pattern board to a
/// host cell and every 1 of the pattern to a 1 of the host.
pub fn filled_contains(host: &FilledBoard, pattern: &FilledBoard) -> bool {
    let k = pattern.board.size();
    let r = host.board.size();
    if k > r {
        return false;
    }
    if k == 0 {
        return true;
    }
    // the chosen columns fix the chosen rows, since 1s must map onto 1s
    let mut columns = Vec::with_capacity(k);
    fn choose(
        host: &FilledBoard,
        pattern: &FilledBoard,
        start: usize,
        columns: &mut Vec<usize>,
    ) -> bool {
        let k = pattern.board.size();
        if columns.len() == k {
            return embeds(host, pattern, columns);
        }
        let remaining = k - columns.len();
        for c in start..=host.board.size() + 1 - remaining {
            columns.push(c);
            if choose(host, pattern, c + 1, columns) {
                return true;
            }
            columns.pop();
        }
        false
    }
    fn embeds(host: &FilledBoard, pattern: &FilledBoard, columns: &[usize]) -> bool {
        let host_rows: Vec<usize> = columns.iter().map(|&c| host.filling.row(c)).collect();
        // the host 1s must be order-isomorphic to the pattern's
        let pattern_rows = pattern.filling.row_of();
        for i in 0..columns.len() {
            for j in i + 1..columns.len() {
                if (host_rows[i] < host_rows[j]) != (pattern_rows[i] < pattern_rows[j]) {
                    return false;
                }
            }
        }
        let mut rows = host_rows.clone();
        rows.sort_unstable();
        let k = columns.len();
        (1..=k).all(|pc| {
            (pattern.board.bottom[pc - 1]..=pattern.board.top[pc - 1])
                .all(|pr| host.board.has_cell(columns[pc - 1], rows[pr - 1]))
        })
    }
    choose(host, pattern, 1, &mut columns)
}

fn reference(perm: &str) -> FilledBoard {
    board_of(&perm.parse().expect("literal permutation"))
        .expect("nonempty permutation")
        .filled
}

static B_1234: LazyLock<FilledBoard> = LazyLock::new(|| reference("1234"));
static B_1324: LazyLock<FilledBoard> = LazyLock::new(|| reference("1324"));
static B_3416725: LazyLock<FilledBoard> = LazyLock::new(|| reference("3416725"));

/// The 2x2 square with an increasing filling.
pub fn b_1234() -> &'static FilledBoard {
    &B_1234
}

/// The 2x2 square with a decreasing filling.
pub fn b_1324() -> &'static FilledBoard {
    &B_1324
}

/// The 3x3 board with bounds `(2,1,1)`/`(3,3,2)` and filling `2,3,1`.
pub fn b_3416725() -> &'static FilledBoard {
    &B_3416725
}

pub fn avoids_b1234(filled: &FilledBoard) -> bool {
    !filled_contains(filled, b_1234())
}

pub fn avoids_b1324_b3416725(filled: &FilledBoard) -> bool {
    !filled_contains(filled, b_1324()) && !filled_contains(filled, b_3416725())
}

fn class_1234() -> PatternSet {
    PatternSet::parse("1234").expect("literal basis")
}

fn class_1324() -> PatternSet {
    PatternSet::parse("1324,3416725").expect("literal basis")
}

/// Checks that pattern avoidance of `perm` and board avoidance of its board
/// agree, for `{1234}` and for `{1324, 3416725}`.
pub fn board_avoidance_check(perm: &Permutation) -> Result<(bool, bool), BoardError> {
    let filled = board_of(perm)?.filled;
    Ok((
        avoids_all(perm, &class_1234()) == avoids_b1234(&filled),
        avoids_all(perm, &class_1324()) == avoids_b1324_b3416725(&filled),
    ))
}

/// The 1s on the antidiagonal: column `i` gets row `r + 1 - i`.
pub fn antidiagonal_filling(board: &NiceBoard) -> Filling {
    let r = board.size();
    Filling {
        row_of: (1..=r).map(|i| r + 1 - i).collect(),
    }
}

/// Fills recursively: with `k` cells in the bottom row and `l` in the rightmost
/// column, put a 1 in the leftmost bottom-row cell if `k <= l`, else in the top
/// cell of the rightmost column; delete that row and column and repeat.
pub fn greedy_filling(board: &NiceBoard) -> Filling {
    let r = board.size();
    let mut rows: Vec<usize> = (1..=r).collect();
    let mut columns: Vec<usize> = (1..=r).collect();
    let mut row_of = vec![0usize; r];
    while let (Some(&bottom_row), Some(&right_column)) = (rows.first(), columns.last()) {
        let in_bottom: Vec<usize> = columns
            .iter()
            .copied()
            .filter(|&c| board.has_cell(c, bottom_row))
            .collect();
        let in_right: Vec<usize> = rows
            .iter()
            .copied()
            .filter(|&row| board.has_cell(right_column, row))
            .collect();
        let (k, l) = (in_bottom.len(), in_right.len());
        debug_assert!(k > 0 && l > 0, "remaining board lost its antidiagonal");
        let (column, row) = if k <= l {
            (in_bottom[0], bottom_row)
        } else {
            (right_column, in_right[l - 1])
        };
        row_of[column - 1] = row;
        rows.retain(|&x| x != row);
        columns.retain(|&x| x != column);
    }
    Filling { row_of }
}

/// Reflects board and filling across the antidiagonal.
pub fn reflect_antidiagonal(board: &NiceBoard, filling: &Filling) -> (NiceBoard, Filling) {
    let r = board.size();
    let mut row_of = vec![0usize; r];
    for column in 1..=r {
        let row = filling.row(column);
        row_of[r - row] = r + 1 - column;
    }
    (board.reflect(), Filling { row_of })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Direction {
    /// From `Av(1234)` to `Av(1324, 3416725)`.
    #[serde(rename = "to_1324_class")]
    To1324Class,
    /// From `Av(1324, 3416725)` to `Av(1234)`.
    #[serde(rename = "to_1234_class")]
    To1234Class,
}

/// Keeps the frame and board of `perm` and swaps its filling for the unique
/// filling avoiding the target class's board patterns.
pub fn map_bijection(perm: &Permutation, direction: Direction) -> Result<Permutation, BoardError> {
    let source = match direction {
        Direction::To1324Class => class_1234(),
        Direction::To1234Class => class_1324(),
    };
    if !avoids_all(perm, &source) {
        return Err(BoardError::NotInSourceClass {
            perm: perm.clone(),
            class: source,
        });
    }
    let fb = board_of(perm)?;
    let filling = match direction {
        Direction::To1324Class => greedy_filling(fb.board()),
        Direction::To1234Class => antidiagonal_filling(fb.board()),
    };
    reconstruct(&fb.frame, &filling)
}

/// A permutation whose board is exactly `board`.
///
/// A left-to-right minimum sits just below row `b` immediately before the
/// first column whose bottom is `b`, and a right-to-left maximum sits just
/// above row `t` immediately after the last column whose top is `t`; the
/// board's own entries follow the antidiagonal.
pub fn witness_permutation(board: &NiceBoard) -> Permutation {
    let r = board.size();
    if r == 0 {
        return Permutation::identity(2);
    }
    // (position key, value key): column c sits at 3c with value 4(r+1-c);
    // minima go to 3c-1 at 4b-1, maxima to 3c+1 at 4t+1
    let mut entries: Vec<(usize, usize)> = Vec::new();
    for column in 1..=r {
        let i = column - 1;
        entries.push((3 * column, 4 * (r + 1 - column)));
        if i == 0 || board.bottom[i] != board.bottom[i - 1] {
            entries.push((3 * column - 1, 4 * board.bottom[i] - 1));
        }
        if i + 1 == r || board.top[i] != board.top[i + 1] {
            entries.push((3 * column + 1, 4 * board.top[i] + 1));
        }
    }
    entries.sort_unstable();
    let keys: Vec<usize> = entries.iter().map(|e| e.1).collect();
    Permutation::standardize(&keys)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn board(bottom: &[usize], top: &[usize]) -> NiceBoard {
        NiceBoard::new(bottom.to_vec(), top.to_vec()).unwrap()
    }

    fn filling(rows: &[usize]) -> Filling {
        Filling::new(rows.to_vec()).unwrap()
    }

    fn filled(bottom: &[usize], top: &[usize], rows: &[usize]) -> FilledBoard {
        FilledBoard::new(board(bottom, top), filling(rows)).unwrap()
    }

    #[test]
    fn reference_boards_match_the_figure() {
        assert_eq!(*b_1234(), filled(&[1, 1], &[2, 2], &[1, 2]));
        assert_eq!(*b_1324(), filled(&[1, 1], &[2, 2], &[2, 1]));
        assert_eq!(*b_3416725(), filled(&[2, 1, 1], &[3, 3, 2], &[2, 3, 1]));
    }

    #[test]
    fn board_of_examples() {
        assert_eq!(
            board_of(&p("23145")).unwrap().filled,
            board_of(&p("1234")).unwrap().filled
        );
        assert_eq!(
            board_of(&p("23145")).unwrap().board(),
            &NiceBoard::square(2)
        );
        assert_eq!(board_of(&p("12")).unwrap().board().size(), 0);
        assert_eq!(board_of(&p("1")).unwrap().board().size(), 0);
        let fb = board_of(&p("3416725")).unwrap();
        assert_eq!(fb.board().bottom(), &[2, 1, 1]);
        assert_eq!(fb.board().top(), &[3, 3, 2]);
        assert_eq!(fb.filling().row_of(), &[2, 3, 1]);
        assert_eq!(fb.frame.lr_mins(), &[(1, 3), (3, 1)]);
        assert_eq!(fb.frame.rl_maxs(), &[(5, 7), (7, 5)]);
        assert_eq!(
            board_of(&Permutation::empty()),
            Err(BoardError::EmptyPermutation)
        );
    }

    #[test]
    fn nice_board_validation() {
        assert!(NiceBoard::new(vec![1, 2], vec![2, 2]).is_err());
        assert!(NiceBoard::new(vec![2, 2], vec![2, 2]).is_err());
        assert!(NiceBoard::new(vec![1], vec![1, 1]).is_err());
        assert!(NiceBoard::new(vec![2, 1], vec![2, 1]).is_ok());
        assert_eq!(board(&[2, 1, 1], &[3, 3, 2]).cell_count(), 7);
    }

    #[test]
    fn board_enumeration_small_sizes() {
        assert_eq!(enumerate_nice_boards(0).unwrap(), vec![NiceBoard::empty()]);
        assert_eq!(enumerate_nice_boards(1).unwrap().len(), 1);
        let two = enumerate_nice_boards(2).unwrap();
        assert_eq!(
            two,
            vec![
                board(&[1, 1], &[2, 1]),
                board(&[1, 1], &[2, 2]),
                board(&[2, 1], &[2, 1]),
                board(&[2, 1], &[2, 2]),
            ]
        );
        assert_eq!(
            enumerate_nice_boards(7),
            Err(BoardError::CapExceeded { size: 7, cap: 6 })
        );
        assert!(enumerate_nice_boards_capped(7, 7).is_ok());
    }

    #[test]
    fn filled_containment_examples() {
        let square = NiceBoard::square(2);
        let anti = FilledBoard::new(square.clone(), antidiagonal_filling(&square)).unwrap();
        assert!(filled_contains(&anti, b_1324()));
        let inc = FilledBoard::new(square.clone(), filling(&[1, 2])).unwrap();
        assert!(filled_contains(&inc, b_1234()));
        assert!(!filled_contains(&inc, b_1324()));
        for b in enumerate_nice_boards(2).unwrap() {
            for f in rook_fillings(&b) {
                let host = FilledBoard::new(b.clone(), f).unwrap();
                assert!(!filled_contains(&host, b_3416725()));
            }
        }
        assert!(filled_contains(b_3416725(), b_3416725()));
    }

    #[test]
    fn board_avoidance_examples() {
        assert_eq!(board_avoidance_check(&p("1324")), Ok((true, true)));
        assert!(avoids_b1234(&board_of(&p("1324")).unwrap().filled));
        assert!(!avoids_b1324_b3416725(
            &board_of(&p("1324")).unwrap().filled
        ));
        assert_eq!(board_avoidance_check(&p("1234")), Ok((true, true)));
    }

    #[test]
    fn antidiagonal_examples() {
        assert_eq!(
            antidiagonal_filling(&NiceBoard::square(2)),
            filling(&[2, 1])
        );
        assert_eq!(antidiagonal_filling(&NiceBoard::empty()), filling(&[]));
        assert_eq!(
            antidiagonal_filling(&board(&[2, 1, 1], &[3, 3, 2])),
            filling(&[3, 2, 1])
        );
    }

    #[test]
    fn greedy_examples() {
        assert_eq!(greedy_filling(&NiceBoard::square(2)), filling(&[1, 2]));
        assert_eq!(
            greedy_filling(&board(&[2, 1, 1], &[3, 3, 2])),
            filling(&[3, 1, 2])
        );
        assert_eq!(greedy_filling(&NiceBoard::empty()), filling(&[]));
    }

    #[test]
    fn greedy_matches_exhaustive_search_on_figure_board() {
        let b = board(&[2, 1, 1], &[3, 3, 2]);
        let avoiding: Vec<Filling> = rook_fillings(&b)
            .into_iter()
            .filter(|f| avoids_b1324_b3416725(&FilledBoard::new(b.clone(), f.clone()).unwrap()))
            .collect();
        assert_eq!(avoiding, vec![filling(&[3, 1, 2])]);
    }

    #[test]
    fn reconstruct_examples() {
        let frame = Frame::of(&p("1234")).unwrap();
        assert_eq!(reconstruct(&frame, &filling(&[1, 2])).unwrap(), p("1234"));
        assert_eq!(reconstruct(&frame, &filling(&[2, 1])).unwrap(), p("1324"));
        assert_eq!(
            reconstruct(&frame, &filling(&[1, 2, 3])),
            Err(BoardError::FillingSize {
                got: 3,
                expected: 2
            })
        );
        let frame = Frame::of(&p("3416725")).unwrap();
        assert_eq!(
            reconstruct(&frame, &filling(&[1, 2, 3])),
            Err(BoardError::OutsideBoard { column: 1, row: 1 })
        );
    }

    #[test]
    fn frame_validation() {
        assert!(Frame::new(0, vec![], vec![]).is_err());
        assert!(Frame::new(2, vec![(2, 1)], vec![(2, 1)]).is_err());
        assert!(Frame::new(3, vec![(1, 1)], vec![(3, 3)]).is_ok());
        assert!(Frame::new(3, vec![(1, 1), (2, 2)], vec![(3, 3)]).is_err());
        assert!(Frame::new(3, vec![(1, 2)], vec![(3, 2)]).is_err());
    }

    #[test]
    fn bijection_examples() {
        assert_eq!(
            map_bijection(&p("1324"), Direction::To1324Class).unwrap(),
            p("1234")
        );
        assert_eq!(
            map_bijection(&p("1234"), Direction::To1234Class).unwrap(),
            p("1324")
        );
        for d in [Direction::To1324Class, Direction::To1234Class] {
            assert_eq!(map_bijection(&p("132"), d).unwrap(), p("132"));
        }
        assert!(matches!(
            map_bijection(&p("1234"), Direction::To1324Class),
            Err(BoardError::NotInSourceClass { .. })
        ));
        assert!(matches!(
            map_bijection(&p("1324"), Direction::To1234Class),
            Err(BoardError::NotInSourceClass { .. })
        ));
    }

    #[test]
    fn reflection_examples() {
        let sq = NiceBoard::square(2);
        assert_eq!(sq.reflect(), sq);
        let b = board(&[2, 1, 1], &[3, 3, 2]);
        assert!(b.is_antidiagonally_symmetric());
        let lopsided = board(&[2, 1, 1], &[3, 2, 1]);
        assert_eq!(lopsided.reflect(), board(&[3, 2, 1], &[3, 3, 2]));
        assert_eq!(lopsided.reflect().reflect(), lopsided);
        let (rb, rf) = reflect_antidiagonal(&b, &filling(&[2, 3, 1]));
        assert_eq!(rb, b);
        assert_eq!(reflect_antidiagonal(&rb, &rf), (b, filling(&[2, 3, 1])));
    }

    #[test]
    fn ascii_rendering() {
        assert_eq!(b_3416725().render_ascii(), ".* \n*..\n .*\n");
        assert_eq!(b_1234().render_ascii(), ".*\n*.\n");
    }

    #[test]
    fn json_encoding() {
        let json = serde_json::to_string(b_3416725()).unwrap();
        assert_eq!(
            json,
            r#"{"r":3,"bottom":[2,1,1],"top":[3,3,2],"row_of":[2,3,1]}"#
        );
    }

    #[test]
    fn witness_examples() {
        for b in [
            NiceBoard::empty(),
            NiceBoard::square(2),
            board(&[2, 1, 1], &[3, 3, 2]),
        ] {
            let w = witness_permutation(&b);
            assert_eq!(board_of(&w).unwrap().board(), &b, "{w}");
        }
    }
}
