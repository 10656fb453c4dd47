"""HTTP session service: play the chair against the universe.

Sessions hold a live game state; the chair posts decisions, the universe
posts insertion ranks (or asks for the adversarial reply), and hints report
the forced-win flag of every legal action.  All request and response bodies
use the instance-document field vocabulary.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException

from .errors import (
    DocumentError,
    IllegalActionError,
    SizeLimitError,
    ValidationError,
)
from .game import (
    CHAIR,
    TERMINAL,
    UNIVERSE,
    GameState,
    apply_chair_action,
    apply_universe_extension,
    enumerate_universe_extensions,
    estimate_search_nodes,
    solve_forced_win,
    terminal_result,
)
from .model import (
    first_place_counts,
    legal_chair_actions,
    illegal_action_reason,
    goal_satisfied,
    mask_vote,
    standing_from_flags,
)
from .rules import winner_rule_for
from .serialize import load_instance

DEFAULT_HINT_GUARD = 10**7


@dataclass(slots=True)
class Session:
    id: str
    state: GameState
    history: list[dict] = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


def session_view(session: Session) -> dict:
    """Everything a client needs to render the board; clients never build
    game states themselves."""
    state = session.state
    inst = state.instance
    flags = list(inst.decisions)
    if state.pending is not None:
        flags.append(state.pending)
    # In the chair phase the current candidate is revealed but unflagged;
    # standing_from_flags already treats addition-variant qualified
    # candidates as standing regardless.
    standing = standing_from_flags(inst.variant, inst.revealed, flags, inst.spoilers)
    masked = [list(mask_vote(v, standing)) for v in inst.votes]
    scores = first_place_counts(standing, masked)
    roles = inst.roles()
    phase = state.phase
    view = {
        "id": session.id,
        "variant": inst.variant,
        "system": inst.system,
        "phase": phase,
        "candidates": list(inst.candidates),
        "spoilers": sorted(inst.spoilers) if inst.spoilers is not None else None,
        "presentation": list(inst.presentation),
        "current": None if phase == TERMINAL else inst.current_candidate,
        "current_index": inst.current_index,
        "num_voters": inst.num_voters,
        "budget": inst.budget,
        "budget_remaining": inst.budget - inst.used_budget()
        - (1 if state.pending in ("deleted", "added") else 0),
        "sigma": list(inst.sigma),
        "d": inst.d,
        "roles": {c: ("good" if c in roles.good else "bad") for c in inst.candidates},
        "decisions": flags,
        "votes": [list(v) for v in inst.votes],
        "standing": list(standing),
        "scores": scores,
        "masked_votes": masked,
        "history": list(session.history),
    }
    if phase == CHAIR:
        view["legal_actions"] = list(legal_chair_actions(inst))
    if phase == UNIVERSE:
        view["next_reveal"] = inst.presentation[inst.current_index + 1]
    if phase == TERMINAL:
        rule = winner_rule_for(inst.system)
        winners, goal = terminal_result(state, rule)
        view["winners"] = sorted(winners)
        view["goal_satisfied"] = goal
    return view


def adversarial_extension(state: GameState, guard: int) -> tuple[tuple[int, ...], bool]:
    """A worst-case universe reply: oracle-backed within the guard, else the
    bury-goods/top-bads heuristic (flagged non-exact)."""
    inst = state.instance
    if estimate_search_nodes(state) <= guard:
        fallback = None
        for ranks in enumerate_universe_extensions(state):
            child = apply_universe_extension(state, ranks)
            if fallback is None:
                fallback = ranks
            if not solve_forced_win(child, validate=False, guard=guard).forced_win:
                return ranks, True
        return fallback, True
    entrant = inst.presentation[inst.current_index + 1]
    good = inst.roles().good
    rank_of = (lambda vote: len(vote)) if entrant in good else (lambda vote: 0)
    return tuple(rank_of(v) for v in inst.votes), False


def create_app(hint_guard: int = DEFAULT_HINT_GUARD) -> FastAPI:
    app = FastAPI(title="seqcontrol sessions")
    sessions: dict[str, Session] = {}
    app.state.sessions = sessions

    def get_session(sid: str) -> Session:
        session = sessions.get(sid)
        if session is None:
            raise HTTPException(status_code=404, detail=f"unknown session {sid!r}")
        return session

    @app.post("/sessions")
    def create_session(document: dict):
        try:
            instance = load_instance(document)
        except DocumentError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        except ValidationError as exc:
            raise HTTPException(
                status_code=400, detail={"violations": exc.violations}
            )
        session = Session(id=uuid.uuid4().hex, state=GameState(instance))
        sessions[session.id] = session
        return {"id": session.id, "view": session_view(session)}

    @app.get("/sessions/{sid}")
    def get_view(sid: str):
        session = get_session(sid)
        with session.lock:
            return session_view(session)

    @app.post("/sessions/{sid}/chair")
    def chair_move(sid: str, body: dict):
        session = get_session(sid)
        action = body.get("action")
        if not isinstance(action, str):
            raise HTTPException(status_code=400, detail="body needs an 'action'")
        with session.lock:
            state = session.state
            if state.phase != CHAIR:
                raise HTTPException(
                    status_code=409,
                    detail=f"no chair decision pending (phase: {state.phase})",
                )
            reason = illegal_action_reason(state.instance, action)
            if reason is not None:
                raise HTTPException(status_code=409, detail=reason)
            candidate = state.instance.current_candidate
            session.state = apply_chair_action(state, action)
            session.history.append(
                {"type": "chair", "candidate": candidate, "action": action}
            )
            return session_view(session)

    @app.post("/sessions/{sid}/universe")
    def universe_move(sid: str, body: dict):
        session = get_session(sid)
        with session.lock:
            state = session.state
            if state.phase != UNIVERSE:
                raise HTTPException(
                    status_code=409,
                    detail=f"no universe reveal pending (phase: {state.phase})",
                )
            mode = body.get("mode", "manual")
            exact = None
            if mode == "adversarial":
                ranks, exact = adversarial_extension(state, hint_guard)
            elif "ranks" in body:
                ranks = body["ranks"]
                if not isinstance(ranks, list) or not all(
                    isinstance(r, int) for r in ranks
                ):
                    raise HTTPException(
                        status_code=400, detail="'ranks' must be a list of integers"
                    )
                ranks = tuple(ranks)
            else:
                raise HTTPException(
                    status_code=400,
                    detail="body needs insertion 'ranks' or mode 'adversarial'",
                )
            entrant = state.instance.presentation[state.instance.current_index + 1]
            try:
                session.state = apply_universe_extension(state, ranks)
            except IllegalActionError as exc:
                raise HTTPException(status_code=409, detail=exc.reason)
            entry = {
                "type": "universe",
                "candidate": entrant,
                "ranks": list(ranks),
                "mode": mode,
            }
            if exact is not None:
                entry["exact"] = exact
            session.history.append(entry)
            return session_view(session)

    @app.get("/sessions/{sid}/hint")
    def hint(sid: str):
        session = get_session(sid)
        with session.lock:
            state = session.state
            if state.phase != CHAIR:
                raise HTTPException(
                    status_code=409,
                    detail=f"no chair decision pending (phase: {state.phase})",
                )
            out = {}
            for action in legal_chair_actions(state.instance):
                child = apply_chair_action(state, action)
                try:
                    verdict = solve_forced_win(
                        child, validate=False, guard=hint_guard
                    )
                except SizeLimitError as exc:
                    raise HTTPException(
                        status_code=503,
                        detail=f"position too large for an exact hint: {exc}",
                    )
                out[action] = verdict.forced_win
            return out

    return app


def serve_sessions(
    port: int, host: str = "127.0.0.1", hint_guard: int = DEFAULT_HINT_GUARD
) -> None:
    """Run the session service until interrupted."""
    import uvicorn

    uvicorn.run(create_app(hint_guard=hint_guard), host=host, port=port)
