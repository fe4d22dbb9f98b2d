from dataclasses import dataclass
from typing import FrozenSet, List, Mapping, Tuple

from model.slr_model import FormulaPlana, PredAtom, Sid
from model.termo_model import Const, Term
from util.enum_base import EnumEntidade
from util.exceptions import UnknownIndexError


class TipoRastreamento(EnumEntidade):
    """Fórmulas de rastreamento de parâmetros: isEq e varEq."""
    IS_EQ = "isEq"
    VAR_EQ = "varEq"


@dataclass(frozen=True)
class TranslationContext:
    """
    Inventário de uma tradução SLR → SO.

    Cada variável de regra ocupa uma posição (slot): `p<i>` para o i-ésimo
    parâmetro, `e<i>` para o i-ésimo existencial da forma prenex e
    `k_<c>` para cada constante. A passagem de parâmetros liga a posição
    do argumento no pai à posição `p<i>` do filho.

    Attributes:
        sid: SID com no máximo uma ocorrência de cada relação por regra
        goal: Átomo de predicado traduzido
        flat_rules: Forma prenex de cada regra, na ordem do SID
        slot_maps: Por regra, variável → posição
        relations: Relações consideradas (nome, aridade)
        slots: Todas as posições, em ordem
        max_children: P, o maior número de átomos de predicado numa regra
        reserved: Variáveis livres do objetivo (não podem ser ligadas)
    """
    sid: Sid
    goal: PredAtom
    flat_rules: Tuple[FormulaPlana, ...]
    slot_maps: Tuple[Mapping[str, str], ...]
    relations: Tuple[Tuple[str, int], ...]
    slots: Tuple[str, ...]
    max_children: int
    reserved: FrozenSet[str] = frozenset()

    @property
    def rule_count(self) -> int:
        return len(self.sid.rules)

    def fo(self, base: str) -> str:
        """Nome de variável ligada de primeira ordem que não captura as livres do objetivo."""
        nome = base
        while nome in self.reserved:
            nome += "_"
        return nome

    @property
    def root(self) -> str:
        return self.fo("x")

    def label_var(self, indice: int) -> str:
        if not 0 <= indice < self.rule_count:
            raise UnknownIndexError(f"Regra {indice} inexistente")
        return f"X{indice + 1}"

    def edge_var(self, j: int) -> str:
        if not 1 <= j <= self.max_children:
            raise UnknownIndexError(f"Aresta Y{j} inexistente (P = {self.max_children})")
        return f"Y{j}"

    def coord_var(self, relacao: str, coordenada: int) -> str:
        aridades = dict(self.relations)
        if relacao not in aridades or not 1 <= coordenada <= aridades[relacao]:
            raise UnknownIndexError(f"Coordenada {coordenada} de '{relacao}' inexistente")
        return f"Z_{relacao}_{coordenada}"

    def slot_var(self, slot: str) -> str:
        if slot not in self.slots:
            raise UnknownIndexError(f"Posição '{slot}' inexistente")
        return f"S_{slot}"

    def slot_of(self, indice: int, termo: Term) -> str:
        if isinstance(termo, Const):
            return f"k_{termo.name}"
        mapa = self.slot_maps[indice]
        if termo.name not in mapa:
            raise UnknownIndexError(f"Variável '{termo.name}' fora da regra {indice}")
        return mapa[termo.name]

    def used_relations(self, indice: int) -> FrozenSet[str]:
        return frozenset(a.rel for a in self.flat_rules[indice].relations)

    def so_variables(self) -> List[Tuple[str, int]]:
        """Variáveis de segunda ordem quantificadas no topo: X_i, Y_j e Z_{R,ℓ}."""
        variaveis = [(self.label_var(i), 1) for i in range(self.rule_count)]
        variaveis += [(self.edge_var(j), 2) for j in range(1, self.max_children + 1)]
        usadas = set().union(*(self.used_relations(i) for i in range(self.rule_count)))
        variaveis += [
            (self.coord_var(nome, l), 2)
            for nome, aridade in self.relations if nome in usadas
            for l in range(1, aridade + 1)
        ]
        return variaveis
