import { describe, expect, it } from 'vitest';

import {
  canvasToMatrix,
  cellExtentToCanvasRect,
  matrixToCanvas,
} from '../src/coords.js';

const FRAME = { width: 320, height: 240 };

describe('coordinate mapping', () => {
  it('maps an unscaled center click to the center cell', () => {
    const cell = canvasToMatrix({ x: 160, y: 120 }, { width: 320, height: 240 }, FRAME);
    expect(cell).toEqual({ x: 160, y: 120 });
  });

  it('inverts a 2x canvas scale', () => {
    const cell = canvasToMatrix({ x: 320, y: 240 }, { width: 640, height: 480 }, FRAME);
    expect(cell).toEqual({ x: 160, y: 120 });
  });

  it.each([1, 1.5, 2])('round trips within one cell at scale %s', (scale) => {
    const canvas = { width: FRAME.width * scale, height: FRAME.height * scale };
    for (const cell of [
      { x: 0, y: 0 },
      { x: 1, y: 1 },
      { x: 159, y: 119 },
      { x: 160, y: 120 },
      { x: 319, y: 239 },
      { x: 7, y: 233 },
    ]) {
      const roundTripped = canvasToMatrix(matrixToCanvas(cell, canvas, FRAME), canvas, FRAME);
      expect(Math.abs(roundTripped.x - cell.x)).toBeLessThanOrEqual(1);
      expect(Math.abs(roundTripped.y - cell.y)).toBeLessThanOrEqual(1);
    }
  });

  it('clamps clicks on the far edge into the frame', () => {
    const cell = canvasToMatrix({ x: 320, y: 240 }, { width: 320, height: 240 }, FRAME);
    expect(cell).toEqual({ x: 319, y: 239 });
  });

  it('maps cell extents to covering canvas rectangles', () => {
    const rect = cellExtentToCanvasRect(10, 20, 19, 29, { width: 640, height: 480 }, FRAME);
    expect(rect).toEqual({ x: 20, y: 40, width: 20, height: 20 });
  });
});
