/**
 * Mapping between canvas (CSS pixel) coordinates and matrix cells.
 *
 * The canvas may be displayed at any scale; picks must land on the cell the
 * operator actually clicked, so the inverse mapping divides the scale out.
 */

export interface Size {
  width: number;
  height: number;
}

export interface Point {
  x: number;
  y: number;
}

function clamp(v: number, lo: number, hi: number): number {
  return Math.min(Math.max(v, lo), hi);
}

/** Canvas click position to the matrix cell under it. */
export function canvasToMatrix(p: Point, canvas: Size, frame: Size): Point {
  const x = Math.floor((p.x * frame.width) / canvas.width);
  const y = Math.floor((p.y * frame.height) / canvas.height);
  return {
    x: clamp(x, 0, frame.width - 1),
    y: clamp(y, 0, frame.height - 1),
  };
}

/** Center of a matrix cell in canvas coordinates. */
export function matrixToCanvas(p: Point, canvas: Size, frame: Size): Point {
  return {
    x: ((p.x + 0.5) * canvas.width) / frame.width,
    y: ((p.y + 0.5) * canvas.height) / frame.height,
  };
}

export interface CanvasRect {
  x: number;
  y: number;
  width: number;
  height: number;
}

/** Inclusive cell extent to the canvas rectangle that covers it. */
export function cellExtentToCanvasRect(
  minX: number,
  minY: number,
  maxX: number,
  maxY: number,
  canvas: Size,
  frame: Size
): CanvasRect {
  const sx = canvas.width / frame.width;
  const sy = canvas.height / frame.height;
  return {
    x: minX * sx,
    y: minY * sy,
    width: (maxX - minX + 1) * sx,
    height: (maxY - minY + 1) * sy,
  };
}
