"""
Geradores de SIDs: Δ(k) para as estruturas de treewidth ≤ k, sua
anotação por tipos Δ(k, φ) para os modelos de uma sentença MSO e o
teste de existência de D-extensão modelo. Também as cliques K_n.
"""
from collections import deque
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from core.combinatoria import set_partitions
from core.mso_types import RegistroTipos, abstract_forget, abstract_glue, registro_tipos, rho, structure_type
from core.slr import check_slr
from core.so import atom_shapes, eval_so, is_monadic, is_sentence, quantifier_rank
from core.structures import d_extensions, port_names
from model.estrutura_model import Signature, Store, Structure
from model.slr_model import Emp, Eq, Exists, Neq, PredAtom, RelAtom, Rule, Sid, SlrFormula, Star
from model.so_model import MsoType, SoFormula
from model.termo_model import Const, Var
from util.config import D_EXTENSION_FRESH, MAX_TIPOS_DESCOBERTOS, MSO_TYPE_RANK_CAP, RELACAO_D
from util.exceptions import (
    InvalidInputError, RankTooLargeError, ReservedSymbolError, TooLargeError, UnknownRelationError,
)
from util.logger_config import logger


def _estrela(partes: Sequence[SlrFormula]) -> SlrFormula:
    if not partes:
        return Emp()
    formula = partes[-1]
    for parte in reversed(partes[:-1]):
        formula = Star(parte, formula)
    return formula


def _nome_livre(base: str, assinatura: Signature) -> str:
    usados = set(assinatura.relation_names) | set(assinatura.constants) | {RELACAO_D}
    while base in usados:
        base += "_"
    return base


def _parametros(k: int) -> Tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, k + 2))


def _checar_assinatura(k: int, assinatura: Signature) -> None:
    if k < 1:
        raise InvalidInputError(f"k deve ser >= 1, obtido {k}")
    if assinatura.has_relation(RELACAO_D) or RELACAO_D in assinatura.constants:
        raise ReservedSymbolError(RELACAO_D)


def _regra_troca(cabeca: str, corpo_pred: str, params: Tuple[str, ...], i: int,
                 puros: Sequence[SlrFormula] = ()) -> Rule:
    """A(x̄) <- ∃y. D(y) * B(x̄)[x_i/y], seguido dos átomos puros dados."""
    args = tuple(Var("y") if j == i else Var(p) for j, p in enumerate(params))
    partes = [RelAtom(RELACAO_D, (Var("y"),)), PredAtom(corpo_pred, args)] + list(puros)
    corpo = Exists("y", _estrela(partes))
    return Rule(cabeca, params, corpo)


def _regra_topo(topo: str, pred: str, params: Tuple[str, ...]) -> Rule:
    """A_k() <- ∃x̄. D(x1) * ... * D(x_{k+1}) * A(x̄)."""
    partes: List[SlrFormula] = [RelAtom(RELACAO_D, (Var(p),)) for p in params]
    partes.append(PredAtom(pred, tuple(Var(p) for p in params)))
    corpo = _estrela(partes)
    for p in reversed(params):
        corpo = Exists(p, corpo)
    return Rule(topo, (), corpo)


def twk_names(k: int, assinatura: Signature) -> Tuple[str, str]:
    """Nomes do predicado A e do predicado de topo A_k de Δ(k)."""
    return _nome_livre("A", assinatura), _nome_livre(f"A_{k}", assinatura)


def gen_twk_sid(k: int, assinatura: Signature) -> Sid:
    """
    Δ(k): composição, uma troca de porta por posição, uma regra por
    relação e mapa de argumentos nas portas, e a regra de topo sobre
    Σ ∪ {D}.

    Raises:
        ReservedSymbolError: D já está na assinatura
    """
    _checar_assinatura(k, assinatura)
    a, topo = twk_names(k, assinatura)
    params = _parametros(k)
    todos = tuple(Var(p) for p in params)
    regras = [Rule(a, params, Star(PredAtom(a, todos), PredAtom(a, todos)))]
    regras += [_regra_troca(a, a, params, i) for i in range(k + 1)]
    for nome, aridade in assinatura.relations:
        for args in product(todos, repeat=aridade):
            regras.append(Rule(a, params, RelAtom(nome, args)))
    regras.append(_regra_topo(topo, a, params))
    logger.info(f"Δ({k}) gerado com {len(regras)} regras sobre {len(assinatura.relations)} relações")
    return Sid(tuple(regras), assinatura.constants)


def gen_twk_rule_count(k: int, assinatura: Signature) -> int:
    """Contagem fechada das regras de Δ(k): 1 + (k+1) + Σ_R (k+1)^#R + 1."""
    return 1 + (k + 1) + sum((k + 1) ** a for _, a in assinatura.relations) + 1


def find_twk_model(s: Structure, sid: Sid, objetivo: PredAtom,
                   frescos: int = D_EXTENSION_FRESH) -> Optional[Structure]:
    """Primeira D-extensão de s (com até `frescos` elementos novos) que satisfaz o objetivo."""
    for extensao in d_extensions(s, frescos):
        if check_slr(extensao, Store(), objetivo, sid):
            return extensao
    return None


def has_twk_model(s: Structure, sid: Sid, objetivo: PredAtom, frescos: int = D_EXTENSION_FRESH) -> bool:
    return find_twk_model(s, sid, objetivo, frescos) is not None


# === Δ(k, φ) ===

class _Descoberta:
    """Ponto fixo de tipos: fila em largura, um nome de predicado por tipo."""

    def __init__(self, assinatura: Signature, k: int, rank: int, vocabulario, registro: RegistroTipos):
        self.assinatura = assinatura
        self.k = k
        self.rank = rank
        self.vocabulario = vocabulario
        self.registro = registro
        self.params = _parametros(k)
        self.portas = port_names(assinatura, k)
        self.constantes = assinatura.constants
        self.prefixo = _nome_livre("A_t", assinatura)
        self.nomes: Dict[MsoType, str] = {}
        self.fila: deque = deque()
        self.regras: List[Rule] = []
        self.vistas = set()

    def nome(self, tipo: MsoType) -> str:
        if tipo not in self.nomes:
            if len(self.nomes) >= MAX_TIPOS_DESCOBERTOS:
                raise TooLargeError(len(self.nomes) + 1, MAX_TIPOS_DESCOBERTOS,
                                    f"tipos descobertos para Δ({self.k}, φ) no rank {self.rank}")
            self.nomes[tipo] = f"{self.prefixo}{len(self.nomes)}"
            self.fila.append(tipo)
        return self.nomes[tipo]

    def emitir(self, regra: Rule) -> None:
        if regra not in self.vistas:
            self.vistas.add(regra)
            self.regras.append(regra)

    def sementes(self) -> None:
        """
        Regras de relação: uma por (R, mapa de argumentos, padrão de
        igualdade entre portas e constantes de Σ). Uma constante fora
        das portas fica num elemento próprio, fora de Rel.
        """
        todos = tuple(Var(p) for p in self.params)
        termos = list(todos) + [Const(c) for c in self.constantes]
        for particao in set_partitions(list(range(len(termos)))):
            bloco = {i: b for b, membros in enumerate(particao) for i in membros}
            puros = [
                (Eq if bloco[i] == bloco[j] else Neq)(termos[i], termos[j])
                for i in range(len(termos)) for j in range(i + 1, len(termos))
            ]
            nomes = self.portas + list(self.constantes)
            constantes = {nome: bloco[i] for i, nome in enumerate(nomes)}
            for nome, aridade in self.assinatura.relations:
                for indices in product(range(self.k + 1), repeat=aridade):
                    base = Structure(
                        self.assinatura.with_constants(self.portas),
                        {nome: {tuple(bloco[i] for i in indices)}},
                        constantes,
                    )
                    tipo = structure_type(base, self.rank, self.vocabulario, self.registro)
                    corpo = _estrela([RelAtom(nome, tuple(todos[i] for i in indices))] + puros)
                    self.emitir(Rule(self.nome(tipo), self.params, corpo))

    def _trocas(self) -> List[Tuple[int, MsoType, List[SlrFormula]]]:
        """
        Variantes de ρ_i: a porta nova pode coincidir com qualquer
        subconjunto das constantes de Σ, fixado por átomos puros na regra.
        """
        variantes = []
        for i, porta in enumerate(self.portas):
            x = Var(self.params[i])
            for tamanho in range(len(self.constantes) + 1):
                for iguais in combinations(self.constantes, tamanho):
                    puros = [(Eq if c in iguais else Neq)(x, Const(c)) for c in self.constantes]
                    tipo = rho(porta, self.rank, self.assinatura.relations, self.vocabulario, self.registro,
                               apelidos=iguais)
                    variantes.append((i, tipo, puros))
        return variantes

    def fechar(self) -> None:
        trocas = self._trocas()
        todos = tuple(Var(p) for p in self.params)
        processados: List[MsoType] = []
        while self.fila:
            tipo = self.fila.popleft()
            processados.append(tipo)
            for i, rho_i, puros in trocas:
                esquecido = abstract_forget(tipo, self.portas[i], self.registro)
                trocado = abstract_glue(esquecido, rho_i, self.registro)
                self.emitir(_regra_troca(self.nome(trocado), self.nomes[tipo], self.params, i, puros))
            for outro in processados:
                colado = abstract_glue(tipo, outro, self.registro)
                corpo = Star(PredAtom(self.nomes[tipo], todos), PredAtom(self.nomes[outro], todos))
                self.emitir(Rule(self.nome(colado), self.params, corpo))
        logger.info(f"Δ({self.k}, φ): {len(self.nomes)} tipos descobertos, {len(self.regras)} regras")


def twk_mso_top_name(k: int, assinatura: Signature) -> str:
    return _nome_livre(f"A_{k}_phi", assinatura)


def gen_twk_mso_sid(k: int, assinatura: Signature, phi: SoFormula, registro: RegistroTipos = None) -> Sid:
    """
    Δ(k, φ): as regras de Δ(k) anotadas pelos tipos de rank qr(φ),
    descobertos a partir das regras de relação e fechados por glue♯ e
    por fgcst♯ seguido de glue♯ com ρ_i. As regras de topo ficam com os
    tipos cujo representante satisfaz φ.

    Os tipos são calculados sobre as relações mencionadas por φ. As
    constantes de Σ nunca são esquecidas: a posição de cada uma em
    relação às portas fica registrada por átomos puros nas regras.

    Raises:
        RankTooLargeError: qr(φ) acima de MSO_TYPE_RANK_CAP
        ReservedSymbolError: D já está na assinatura
        InvalidInputError: φ não é sentença MSO
        TooLargeError: Mais tipos do que MAX_TIPOS_DESCOBERTOS
    """
    _checar_assinatura(k, assinatura)
    if not is_sentence(phi) or not is_monadic(phi):
        raise InvalidInputError("φ deve ser uma sentença MSO")
    rank = quantifier_rank(phi)
    if rank > MSO_TYPE_RANK_CAP:
        raise RankTooLargeError(rank, MSO_TYPE_RANK_CAP)
    vocabulario = atom_shapes(phi)
    for nome, aridade in vocabulario:
        if not assinatura.has_relation(nome) or assinatura.arity(nome) != aridade:
            raise UnknownRelationError(nome)
    registro = registro if registro is not None else registro_tipos

    descoberta = _Descoberta(assinatura, k, rank, vocabulario, registro)
    descoberta.sementes()
    descoberta.fechar()
    topo = twk_mso_top_name(k, assinatura)
    aceitos = 0
    for tipo, nome in descoberta.nomes.items():
        representante = registro.representante(tipo)
        if eval_so(representante.structure, representante, Store(), phi):
            descoberta.emitir(_regra_topo(topo, nome, descoberta.params))
            aceitos += 1
    logger.info(f"Δ({k}, φ): {aceitos} tipos satisfazem φ")
    return Sid(tuple(descoberta.regras), assinatura.constants, ((topo, 0),))


def strip_annotations(sid: Sid, k: int, assinatura: Signature) -> Sid:
    """
    Apaga as anotações de Δ(k, φ): todo predicado anotado vira A, o topo
    vira A_k e os átomos puros das regras de relação somem.
    """
    a, topo_k = twk_names(k, assinatura)
    topo_phi = twk_mso_top_name(k, assinatura)

    def renomear(nome: str) -> str:
        return topo_k if nome == topo_phi else a

    def limpar(f: SlrFormula) -> SlrFormula:
        if isinstance(f, PredAtom):
            return PredAtom(renomear(f.pred), f.args)
        if isinstance(f, Star):
            esquerda, direita = limpar(f.left), limpar(f.right)
            if isinstance(esquerda, Emp):
                return direita
            if isinstance(direita, Emp):
                return esquerda
            return Star(esquerda, direita)
        if isinstance(f, Exists):
            return Exists(f.var, limpar(f.body))
        if isinstance(f, (Eq, Neq)):
            return Emp()
        return f

    regras = tuple(dict.fromkeys(Rule(renomear(r.head), r.params, limpar(r.body)) for r in sid.rules))
    return Sid(regras, sid.constants)


# === Cliques ===

def clique_signature() -> Signature:
    return Signature((("V", 1), ("E", 2)))


def clique_structure(n: int) -> Structure:
    """K_n: V = 1..n e E com todos os pares ordenados de elementos distintos."""
    if n < 1:
        raise InvalidInputError(f"n deve ser >= 1, obtido {n}")
    vertices = range(1, n + 1)
    return Structure(
        clique_signature(),
        {"V": {(i,) for i in vertices}, "E": {(i, j) for i in vertices for j in vertices if i != j}},
    )
