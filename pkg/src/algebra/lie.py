"""so(2,l-1) 생성원 및 분해 모듈"""

from dataclasses import dataclass, field

import numpy as np

from .ambient import AlgebraElement, GroupElement, basis_vector, check_dim, eta
from ..errors import InvalidRootLabelError

# 좌표 인덱스
U, T, X, Y, Z1 = 0, 1, 2, 3, 4


def _boost(l: int, i: int, j: int) -> np.ndarray:
    m = np.zeros((l + 1, l + 1))
    m[i, j] = m[j, i] = 1.0
    return m


def generator(name: str, l: int) -> AlgebraElement:
    """A 의 기저 J1 (t,y 부스트, H 에 속함) / J2 (u,x 부스트, Q 에 속함)"""
    check_dim(l)
    if name == "J1":
        return AlgebraElement(_boost(l, T, Y))
    if name == "J2":
        return AlgebraElement(_boost(l, U, X))
    raise ValueError(f"알 수 없는 생성원입니다: {name}")


@dataclass(frozen=True)
class RootLabel:
    """제한근 라벨 (α, β): ad(J1) 고유값 α, ad(J2) 고유값 β"""
    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha not in (-1, 0, 1) or self.beta not in (-1, 0, 1):
            raise InvalidRootLabelError(f"라벨 성분은 -1, 0, +1 중 하나여야 합니다: ({self.alpha}, {self.beta})")
        if self.alpha == 0 and self.beta == 0:
            raise InvalidRootLabelError("(0, 0) 은 근이 아닙니다")

    @property
    def is_positive(self) -> bool:
        # (α, β) 사전식 순서
        return self.alpha > 0 or (self.alpha == 0 and self.beta > 0)

    def negated(self) -> "RootLabel":
        return RootLabel(-self.alpha, -self.beta)

    def valid_for(self, l: int) -> bool:
        return l >= 4 or (self.alpha != 0 and self.beta != 0)

    @property
    def name(self) -> str:
        symbol = {-1: "-", 0: "0", 1: "+"}
        return f"X{symbol[self.alpha]}{symbol[self.beta]}"

    def __str__(self) -> str:
        return self.name


def all_labels(l: int) -> list[RootLabel]:
    """해당 차원에서 유효한 라벨 전체"""
    check_dim(l)
    labels = [RootLabel(a, b) for a in (1, 0, -1) for b in (1, 0, -1) if (a, b) != (0, 0)]
    return [label for label in labels if label.valid_for(l)]


def z_multiplicity(l: int) -> int:
    """0 성분 라벨의 중복도 (z 좌표 개수)"""
    return check_dim(l) - 3


def root_vector(label: RootLabel, l: int, z_index: int = 0) -> AlgebraElement:
    """제한근 벡터 X_{αβ}

    영벡터 v_β = e_u + β e_x (β=0 이면 e_z), w_α = e_t + α e_y (α=0 이면 e_z) 로
    v(ηw)^T - w(ηv)^T 를 만든다. α=0 인 라벨은 부호를 뒤집어
    exp(a X_{0+}) 가 z 성분을 a(u-x) 만큼 바꾸도록 맞춘다.
    """
    check_dim(l)
    if not label.valid_for(l):
        raise InvalidRootLabelError(f"AdS_{l} 에는 {label} 근이 없습니다")
    if label.alpha == 0 or label.beta == 0:
        if not 0 <= z_index < z_multiplicity(l):
            raise InvalidRootLabelError(f"z_index 범위를 벗어났습니다: {z_index}")
    e_z = basis_vector(l, Z1 + z_index) if l >= 4 else None

    v = basis_vector(l, U) + label.beta * basis_vector(l, X) if label.beta else e_z
    w = basis_vector(l, T) + label.alpha * basis_vector(l, Y) if label.alpha else e_z
    h = eta(l)
    matrix = np.outer(v, h @ w) - np.outer(w, h @ v)
    if label.alpha == 0:
        matrix = -matrix
    return AlgebraElement(matrix)


def cone_generator(w: np.ndarray) -> AlgebraElement:
    """광추 방향 멱영원 E(w) (|w| = 1)"""
    w = np.asarray(w, dtype=float)
    if abs(np.linalg.norm(w) - 1.0) > 1e-12:
        raise ValueError(f"단위 벡터가 아닙니다: |w| = {np.linalg.norm(w):.15g}")
    l = check_dim(w.shape[0] + 1)
    m = np.zeros((l + 1, l + 1))
    m[0, 1] = 1.0
    m[1, 0] = -1.0
    m[0, 2:] = w
    m[2:, 0] = w
    return AlgebraElement(m)


def k_theta(l: int) -> GroupElement:
    """Cartan 대합을 생성하는 군 원소 diag(-1, -1, 1, ..., 1)"""
    diag = np.ones(check_dim(l) + 1)
    diag[:2] = -1.0
    return GroupElement(np.diag(diag))


def involution(kind: str, x: AlgebraElement) -> AlgebraElement:
    """σ (u 반사에 의한 켤레) 또는 θ (k_θ 에 의한 켤레)"""
    l = x.dim
    if kind == "sigma":
        s = np.eye(l + 1)
        s[0, 0] = -1.0
        return AlgebraElement(s @ x.matrix @ s)
    if kind == "theta":
        k = k_theta(l).matrix
        return AlgebraElement(k @ x.matrix @ np.linalg.inv(k))
    raise ValueError(f"알 수 없는 대합입니다: {kind}")


def stabilizer_basis(l: int) -> list[AlgebraElement]:
    """H = so(1,l-1) 의 기저 (e_u 를 소멸시키는 원소)"""
    check_dim(l)
    h = eta(l)
    basis = []
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            m = np.zeros((l + 1, l + 1))
            m[i, j] = 1.0
            m[j, i] = -h[i, i] * h[j, j]
            basis.append(AlgebraElement(m))
    return basis


def algebra_basis(l: int) -> list[AlgebraElement]:
    """so(2,l-1) 전체 기저"""
    check_dim(l)
    h = eta(l)
    basis = []
    for i in range(l + 1):
        for j in range(i + 1, l + 1):
            m = np.zeros((l + 1, l + 1))
            m[i, j] = 1.0
            m[j, i] = -h[i, i] * h[j, j]
            basis.append(AlgebraElement(m))
    return basis


@dataclass
class IwasawaBasis:
    """Iwasawa 분해의 A, N, N̄ 기저"""
    dim: int
    a: list[AlgebraElement]
    n: list[AlgebraElement]
    nbar: list[AlgebraElement]
    n_labels: list[RootLabel] = field(default_factory=list)
    nbar_labels: list[RootLabel] = field(default_factory=list)

    def span_residual(self, x: AlgebraElement, part: str = "nbar") -> float:
        """x 를 N 또는 N̄ 의 생성 공간에 사영했을 때의 잔차"""
        elements = self.nbar if part == "nbar" else self.n
        columns = np.column_stack([e.matrix.ravel() for e in elements])
        target = x.matrix.ravel()
        coeffs, *_ = np.linalg.lstsq(columns, target, rcond=None)
        return float(np.max(np.abs(columns @ coeffs - target)))


def iwasawa_basis(l: int) -> IwasawaBasis:
    """양의 근을 (α, β) 사전식으로 고른 Iwasawa 기저"""
    check_dim(l)
    positive = [label for label in all_labels(l) if label.is_positive]
    n, n_labels, nbar, nbar_labels = [], [], [], []
    for label in positive:
        copies = z_multiplicity(l) if (label.alpha == 0 or label.beta == 0) else 1
        for z_index in range(copies):
            n.append(root_vector(label, l, z_index))
            n_labels.append(label)
            nbar.append(root_vector(label.negated(), l, z_index))
            nbar_labels.append(label.negated())
    return IwasawaBasis(
        dim=l,
        a=[generator("J1", l), generator("J2", l)],
        n=n,
        nbar=nbar,
        n_labels=n_labels,
        nbar_labels=nbar_labels,
    )


def eigen_residual(label: RootLabel, x: AlgebraElement, l: int) -> float:
    """|[J1, X] - αX|, |[J2, X] - βX| 중 최댓값"""
    j1, j2 = generator("J1", l), generator("J2", l)
    r1 = np.max(np.abs(j1.bracket(x).matrix - label.alpha * x.matrix))
    r2 = np.max(np.abs(j2.bracket(x).matrix - label.beta * x.matrix))
    return float(max(r1, r2))
