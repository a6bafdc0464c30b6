#!/usr/bin/env python3
# Copyright 2026 The defclust Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/synthetic/{corpus,gold}.jsonl.

Four polysemous Spanish terms, three senses each, ten paraphrased
definitions per sense. Each definition draws a subset of its sense's
content vocabulary and glues it together with shared function words, so
senses overlap only through grammar and the defined term itself.

Output is deterministic for a given --seed.
"""

import argparse
import json
import pathlib
import random

SENSES = {
    "barra": {
        "metal": "pieza larga rígida metal hierro acero varilla cilíndrica "
                 "soporte estructura construcción peso",
        "bar": "mostrador local bebidas cantinero clientes copas taburetes "
               "barman tragos cervezas sirven noche",
        "signo": "signo trazo diagonal escritura separar fechas fracciones "
                 "teclado símbolo inclinado caracteres ortografía",
    },
    "célula": {
        "biologia": "núcleo membrana protoplasma citoplasma organelos unidad "
                    "vida organismo tejido vivos adn microscópica",
        "politica": "grupo militantes organización clandestina política "
                    "miembros partido secreta revolucionaria red acciones "
                    "reducido",
        "fotoelectrica": "energía solar luz eléctrica fotovoltaica dispositivo "
                         "convierte silicio corriente paneles semiconductor "
                         "radiación",
    },
    "punto": {
        "geometria": "geometría dimensiones posición espacio coordenadas "
                     "recta plano ente abstracto intersección líneas euclides",
        "puntuacion": "pausa oración enunciado final mayúscula párrafo "
                      "puntuación gramática frase lectura seguido aparte",
        "marcador": "tanto marcador partido juego equipo anotación victoria "
                    "tenis jugador competencia gana árbitro",
    },
    "ventana": {
        "arquitectura": "abertura pared muro aire vidrio cristal marco casa "
                        "edificio ventilación hoja iluminar",
        "informatica": "interfaz gráfica pantalla programa sistema operativo "
                       "usuario aplicación rectangular escritorio menú "
                       "computadora",
        "temporal": "período tiempo intervalo oportunidad plazo momento "
                    "lanzamiento limitado días horas breve favorable",
    },
}

OPENERS = [
    ("analytic", "la {t} es un"),
    ("analytic", "la {t} es una"),
    ("extensional", "la {t} consta de"),
    ("extensional", "la {t} comprende"),
    ("functional", "la {t} sirve para"),
    ("functional", "la {t} permite"),
]

GLUE = "de del el la los las que en y con para por se un una al".split()


def make_definition(rng, term, vocabulary):
    def_type, opener = rng.choice(OPENERS)
    words = rng.sample(vocabulary, rng.randint(4, 11))
    body = []
    for i, word in enumerate(words):
        if i:
            body.append(rng.choice(GLUE))
        body.append(word)
    text = opener.format(t=term) + " " + " ".join(body) + "."
    return def_type, text[0].upper() + text[1:]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=2009)
    parser.add_argument("--per-sense", type=int, default=10)
    parser.add_argument("--out", type=pathlib.Path,
                        default=pathlib.Path(__file__).resolve().parent.parent
                        / "data" / "synthetic")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    args.out.mkdir(parents=True, exist_ok=True)
    corpus, gold = [], []
    for term, senses in SENSES.items():
        for sense, vocab in senses.items():
            vocabulary = vocab.split()
            for k in range(args.per_sense):
                def_type, text = make_definition(rng, term, vocabulary)
                doc_id = f"{term}-{sense}-{k + 1:02d}"
                label = f"{term}/{sense}"
                corpus.append({"id": doc_id, "text": text, "term": term,
                               "def_type": def_type, "gold_sense": label})
                gold.append({"id": doc_id, "sense": label})

    with open(args.out / "corpus.jsonl", "w", encoding="utf-8") as f:
        for rec in corpus:
            f.write(json.dumps(rec, ensure_ascii=False) + "\n")
    with open(args.out / "gold.jsonl", "w", encoding="utf-8") as f:
        for rec in gold:
            f.write(json.dumps(rec, ensure_ascii=False) + "\n")


if __name__ == "__main__":
    main()
